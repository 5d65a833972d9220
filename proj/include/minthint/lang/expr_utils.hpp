#pragma once

#include <cstddef>
#include <vector>

#include "minthint/lang/ast.hpp"

namespace minthint::lang {

/// All subtrees of `e` including `e`, deduplicated structurally, in preorder of first occurrence.
std::vector<ExprPtr> subexps(const ExprPtr& e);

/// AST node count where an array read contributes 1 regardless of its index.
std::size_t expr_size(const Expr& e);

/// One node position inside an expression tree. Occurrences of the same
/// subtree at different positions are distinct.
struct Occurrence {
  ExprPtr expr;
  std::size_t begin = 0;  // preorder index of the subtree root
  std::size_t end = 0;  // one past the last preorder index of the subtree
  int parent = -1;  // index into the occurrence list

  bool contains(const Occurrence& o) const { return begin <= o.begin && o.end <= end; }
  bool overlaps(const Occurrence& o) const { return begin < o.end && o.begin < end; }
};

/// Every node of `root` as an occurrence, in preorder.
std::vector<Occurrence> occurrences(const ExprPtr& root);

/// True when the expression reads no variable.
bool is_constant_expr(const Expr& e);

/// Constant leaves (deduplicated) appearing anywhere in a function.
std::vector<ExprPtr> constants_in(const FunctionDef& f);

}  // namespace minthint::lang
