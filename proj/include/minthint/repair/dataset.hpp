#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "minthint/repair/repair_space.hpp"
#include "minthint/transformer/st_trans.hpp"

namespace minthint::repair {

/// Value vectors over the transformer: one column per repair-space expression
/// that evaluates without fault on every input state, plus the LHS column
/// taken from the output states.
struct Dataset {
  std::size_t rows = 0;
  std::vector<std::int64_t> x;
  std::vector<std::vector<std::int64_t>> columns;
  std::vector<std::size_t> candidate;  // column -> index into RepairSpace::candidates
  std::vector<int> column_of;  // candidate index -> column, -1 when dropped

  bool has(std::size_t cand) const { return column_of[cand] >= 0; }
};

/// The input states of a transformer, addressable by variable slot.
class InputFrames {
 public:
  explicit InputFrames(const transformer::StateTransformer& f);

  std::size_t rows() const { return frames_.size(); }
  /// Values of `e` on every state, or nullopt when it faults on some state.
  std::optional<std::vector<std::int64_t>> evaluate(const lang::Expr& e) const;

 private:
  std::vector<std::vector<const exec::Value*>> frames_;
};

Dataset build_dataset(const transformer::StateTransformer& f, const RepairSpace& r,
                      const lang::NormalizedTarget& target);

/// Rows are transformer pairs; the header holds the LHS and the printed expressions.
void write_csv(std::ostream& out, const Dataset& d, const RepairSpace& r, const lang::NormalizedTarget& target);

}  // namespace minthint::repair
