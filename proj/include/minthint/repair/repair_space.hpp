#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "minthint/lang/ast.hpp"
#include "minthint/lang/normalize.hpp"

namespace minthint::repair {

inline constexpr std::size_t kDefaultSpaceCap = 200'000;
inline constexpr std::size_t kIndexSizeBound = 4;

/// The variables visible at a target, excluding its synthetic LHS.
std::vector<lang::Variable> vars_in_scope(const lang::Program& p, const lang::NormalizedTarget& target);

/// Constants available to enumeration: ints 0, 1, -1 then the function's other
/// int constants ascending; chars of the function by code; false and true.
std::vector<lang::ExprPtr> constant_pool(const lang::FunctionDef& f);

struct EnumOptions {
  std::size_t max_size = 4;
  std::size_t index_size = kIndexSizeBound;
  std::size_t cap = kDefaultSpaceCap;
  /// When set, array reads it rejects are left out before composition.
  std::function<bool(const lang::Expr&)> keep_read;
};

/// Every well-typed expression of size <= max_size over `vars` and `constants`,
/// in a fixed order: by size, then unary, binary (operands, then operator) and
/// ternary forms. Array reads have size 1 and take index expressions of size up
/// to `index_size` that contain no array read. Composite expressions that read
/// no variable are skipped. Throws SpaceTooLarge beyond `cap` expressions.
/// `keep_read` can drop array reads up front: every composite over a read
/// that faults on an observed state would be dropped from the dataset anyway,
/// short-circuited operands aside.
std::vector<lang::ExprPtr> enum_exps(const std::vector<lang::Variable>& vars,
                                     const std::vector<lang::ExprPtr>& constants, const EnumOptions& opts = {});

struct Candidate {
  lang::ExprPtr expr;
  bool in_s = false;  // subexpression of the analyzed RHS
  bool in_e = false;  // produced by enumeration
  std::size_t ordinal = 0;  // position in the repair space
};

/// R = S ∪ E: the RHS subexpressions first, then enumerated expressions not in S.
struct RepairSpace {
  lang::ExprPtr rhs;
  std::vector<Candidate> candidates;
  std::size_t max_size = 0;  // size bound actually used for E
};

RepairSpace build_repair_space(const lang::Program& p, const lang::NormalizedTarget& target,
                               const EnumOptions& opts = {});

}  // namespace minthint::repair
