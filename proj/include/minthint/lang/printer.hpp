#pragma once

#include <string>

#include "minthint/lang/ast.hpp"

namespace minthint::lang {

/// Renders an expression with the minimal parentheses needed to parse back to the same tree.
std::string to_string(const Expr& e);
inline std::string to_string(const ExprPtr& e) { return to_string(*e); }

/// Fully parenthesized rendering; distinct trees always render differently.
std::string to_key(const Expr& e);

std::string char_literal(std::int64_t code);

std::string pretty_print(const Program& p);

}  // namespace minthint::lang
