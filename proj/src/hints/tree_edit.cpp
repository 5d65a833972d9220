#include "minthint/hints/tree_edit.hpp"

#include <algorithm>

#include "minthint/lang/printer.hpp"

namespace minthint::hints {

int OrderedTree::add(std::string label, int parent) {
  int id = static_cast<int>(labels.size());
  labels.push_back(std::move(label));
  children.emplace_back();
  if (parent >= 0) children[parent].push_back(id);
  return id;
}

namespace {

std::string node_label(const lang::Expr& e) {
  using lang::ExprKind;
  switch (e.kind) {
    case ExprKind::Const:
      switch (e.type) {
        case lang::Scalar::Bool: return e.value ? "true" : "false";
        case lang::Scalar::Char: return lang::char_literal(e.value);
        default: return std::to_string(e.value);
      }
    case ExprKind::Var: return e.name;
    case ExprKind::Index: return e.name + "[]";
    case ExprKind::Unary: return std::string(lang::op_symbol(e.unary_op())) + "u";
    case ExprKind::Binary: return std::string(lang::op_symbol(e.binary_op()));
    case ExprKind::Ternary: return "?:";
  }
  return "";
}

void build(const lang::Expr& e, int parent, OrderedTree& t) {
  int id = t.add(node_label(e), parent);
  for (const auto& c : e.children) build(*c, id, t);
}

// Postorder numbering with leftmost-leaf descendants, as Zhang-Shasha needs.
struct Postorder {
  std::vector<const std::string*> label;
  std::vector<int> leftmost;
  std::vector<int> keyroots;

  explicit Postorder(const OrderedTree& t) {
    if (t.size() == 0) return;
    visit(t, 0);
    std::vector<bool> seen(label.size() + 1, false);
    for (int i = static_cast<int>(label.size()) - 1; i >= 0; --i) {
      int l = leftmost[i];
      if (!seen[l]) {
        seen[l] = true;
        keyroots.push_back(i);
      }
    }
    std::sort(keyroots.begin(), keyroots.end());
  }

  int visit(const OrderedTree& t, int node) {
    int first_leaf = -1;
    for (int c : t.children[node]) {
      int l = visit(t, c);
      if (first_leaf < 0) first_leaf = l;
    }
    int id = static_cast<int>(label.size());
    label.push_back(&t.labels[node]);
    leftmost.push_back(first_leaf < 0 ? id : first_leaf);
    return leftmost.back();
  }
};

}  // namespace

OrderedTree to_tree(const lang::Expr& e) {
  OrderedTree t;
  build(e, -1, t);
  return t;
}

std::size_t tree_edit_distance(const OrderedTree& a, const OrderedTree& b) {
  if (a.size() == 0 || b.size() == 0) return a.size() + b.size();
  Postorder A(a), B(b);
  const int n = static_cast<int>(a.size()), m = static_cast<int>(b.size());
  std::vector<int> td(n * m, 0);
  std::vector<int> fd((n + 1) * (m + 1));

  for (int i : A.keyroots) {
    for (int j : B.keyroots) {
      const int li = A.leftmost[i], lj = B.leftmost[j];
      const int cols = j - lj + 2;
      auto FD = [&](int x, int y) -> int& { return fd[x * cols + y]; };
      FD(0, 0) = 0;
      for (int x = 1; x <= i - li + 1; ++x) FD(x, 0) = FD(x - 1, 0) + 1;
      for (int y = 1; y <= j - lj + 1; ++y) FD(0, y) = FD(0, y - 1) + 1;
      for (int x = 1; x <= i - li + 1; ++x) {
        const int di = li + x - 1;
        for (int y = 1; y <= j - lj + 1; ++y) {
          const int dj = lj + y - 1;
          int best = std::min(FD(x - 1, y), FD(x, y - 1)) + 1;
          if (A.leftmost[di] == li && B.leftmost[dj] == lj) {
            best = std::min(best, FD(x - 1, y - 1) + (*A.label[di] == *B.label[dj] ? 0 : 1));
            FD(x, y) = best;
            td[di * m + dj] = best;
          } else {
            FD(x, y) = std::min(best, FD(A.leftmost[di] - li, B.leftmost[dj] - lj) + td[di * m + dj]);
          }
        }
      }
    }
  }
  return static_cast<std::size_t>(td[n * m - 1]);
}

std::size_t tree_edit_distance(const lang::Expr& a, const lang::Expr& b) {
  return tree_edit_distance(to_tree(a), to_tree(b));
}

}  // namespace minthint::hints
