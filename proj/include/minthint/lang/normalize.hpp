#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "minthint/lang/ast.hpp"

namespace minthint::lang {

enum class Component : std::uint8_t {
  AssignRHS,
  BranchPredicate,
  ForInit,
  ForCond,
  ForUpd,
  ReturnExpr,
  PrintExpr,
  TernaryGuard,
  TernaryArm,
};

std::string_view component_name(Component c);

/// One analyzable expression of a statement, viewed as `lhs := rhs`.
struct NormalizedTarget {
  int line = 0;
  Component component = Component::AssignRHS;
  int arm = -1;  // TernaryArm: 0 = then, 1 = else
  std::string lhs;  // written variable, or a fresh name such as `branch_<line>`
  Scalar lhs_type = Scalar::Int;
  int lhs_slot = -1;  // slot when lhs is an existing scalar variable in scope
  ExprPtr rhs;
  std::vector<int> scope;  // visible slots at the statement

  bool same_site(const NormalizedTarget& o) const {
    return line == o.line && component == o.component && arm == o.arm;
  }
  std::string label() const;
};

/// Rewrites a statement into assignment form. For loops yield three
/// targets; an RHS whose top node is a ternary yields the guard and each arm.
std::vector<NormalizedTarget> normalize(const FunctionDef& f, const Stmt& stmt);

}  // namespace minthint::lang
