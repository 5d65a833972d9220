#pragma once

#include <vector>

#include "minthint/hints/hint.hpp"

namespace minthint::hints {

/// Drops repeated (line, text) pairs keeping the best score, then sorts by
/// score descending. Equal scores fall back to kind priority, support,
/// line, repair-space position and text.
std::vector<Hint> rank_hints(std::vector<Hint> hints);

}  // namespace minthint::hints
