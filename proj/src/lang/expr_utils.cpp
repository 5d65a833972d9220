#include "minthint/lang/expr_utils.hpp"

#include <unordered_set>

namespace minthint::lang {

namespace {

void preorder(const ExprPtr& e, std::vector<ExprPtr>& out) {
  out.push_back(e);
  for (const auto& c : e->children) preorder(c, out);
}

void walk(const ExprPtr& e, int parent, std::vector<Occurrence>& out) {
  std::size_t me = out.size();
  out.push_back(Occurrence{e, me, me, parent});
  for (const auto& c : e->children) walk(c, static_cast<int>(me), out);
  out[me].end = out.size();
}

void collect_constants(const ExprPtr& e, std::vector<ExprPtr>& out) {
  if (!e) return;
  std::vector<ExprPtr> nodes;
  preorder(e, nodes);
  for (const auto& n : nodes) {
    if (n->kind == ExprKind::Const) out.push_back(n);
  }
}

void collect_constants(const std::vector<Stmt>& stmts, std::vector<ExprPtr>& out) {
  for (const auto& s : stmts) {
    collect_constants(s.expr, out);
    collect_constants(s.index, out);
    for (const auto* part : {s.init.get(), s.update.get()}) {
      if (part) {
        collect_constants(part->expr, out);
        collect_constants(part->index, out);
      }
    }
    collect_constants(s.body, out);
    collect_constants(s.else_body, out);
  }
}

}  // namespace

std::vector<ExprPtr> subexps(const ExprPtr& e) {
  std::vector<ExprPtr> all;
  preorder(e, all);
  std::unordered_set<ExprPtr, ExprHash, ExprEqual> seen;
  std::vector<ExprPtr> out;
  for (auto& n : all) {
    if (seen.insert(n).second) out.push_back(n);
  }
  return out;
}

std::size_t expr_size(const Expr& e) {
  if (e.kind == ExprKind::Index) return 1;
  std::size_t n = 1;
  for (const auto& c : e.children) n += expr_size(*c);
  return n;
}

std::vector<Occurrence> occurrences(const ExprPtr& root) {
  std::vector<Occurrence> out;
  walk(root, -1, out);
  return out;
}

bool is_constant_expr(const Expr& e) {
  if (e.kind == ExprKind::Var || e.kind == ExprKind::Index) return false;
  for (const auto& c : e.children) {
    if (!is_constant_expr(*c)) return false;
  }
  return true;
}

std::vector<ExprPtr> constants_in(const FunctionDef& f) {
  std::vector<ExprPtr> found;
  collect_constants(f.body, found);
  std::unordered_set<ExprPtr, ExprHash, ExprEqual> seen;
  std::vector<ExprPtr> out;
  for (auto& c : found) {
    if (seen.insert(c).second) out.push_back(c);
  }
  return out;
}

}  // namespace minthint::lang
