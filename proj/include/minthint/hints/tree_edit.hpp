#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "minthint/lang/ast.hpp"

namespace minthint::hints {

/// A rooted, ordered, labeled tree. Node 0 is the root.
struct OrderedTree {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> children;

  int add(std::string label, int parent = -1);
  std::size_t size() const { return labels.size(); }
};

/// One node per AST node. Array reads become a node labeled `name[]` whose
/// only child is the index expression.
OrderedTree to_tree(const lang::Expr& e);

/// Unit-cost ordered tree edit distance (insert, delete, relabel).
std::size_t tree_edit_distance(const OrderedTree& a, const OrderedTree& b);
std::size_t tree_edit_distance(const lang::Expr& a, const lang::Expr& b);

}  // namespace minthint::hints
