#include "minthint/lang/normalize.hpp"

#include <algorithm>

#include "minthint/error.hpp"

namespace minthint::lang {

std::string_view component_name(Component c) {
  switch (c) {
    case Component::AssignRHS: return "assign";
    case Component::BranchPredicate: return "branch";
    case Component::ForInit: return "for-init";
    case Component::ForCond: return "for-cond";
    case Component::ForUpd: return "for-upd";
    case Component::ReturnExpr: return "return";
    case Component::PrintExpr: return "print";
    case Component::TernaryGuard: return "ternary-guard";
    case Component::TernaryArm: return "ternary-arm";
  }
  return "?";
}

std::string NormalizedTarget::label() const {
  std::string out = std::to_string(line) + ":" + std::string(component_name(component));
  if (arm >= 0) out += std::to_string(arm);
  return out;
}

namespace {

std::string fresh_name(const FunctionDef& f, const std::vector<int>& scope, std::string base) {
  auto taken = [&](const std::string& n) {
    return std::any_of(scope.begin(), scope.end(), [&](int s) { return f.variables[s].name == n; });
  };
  while (taken(base)) base += "_";
  return base;
}

struct Lhs {
  std::string name;
  Scalar type;
  int slot;
};

// Emits one target for `rhs`, or guard + arms when an assignment, return or print
// has a ternary at the top. Loop headers are never split.
void emit(std::vector<NormalizedTarget>& out, const FunctionDef& f, const Stmt& s, Component base,
          const Lhs& lhs, const ExprPtr& rhs) {
  auto make = [&](Component c, int arm, const Lhs& l, ExprPtr e) {
    NormalizedTarget t;
    t.line = s.line;
    t.component = c;
    t.arm = arm;
    t.lhs = l.name;
    t.lhs_type = l.type;
    t.lhs_slot = l.slot;
    t.rhs = std::move(e);
    t.scope = s.scope;
    out.push_back(std::move(t));
  };
  bool splits = base == Component::AssignRHS || base == Component::ReturnExpr || base == Component::PrintExpr;
  if (splits && rhs->kind == ExprKind::Ternary) {
    Lhs guard{fresh_name(f, s.scope, "guard_" + std::to_string(s.line)), Scalar::Bool, -1};
    make(Component::TernaryGuard, -1, guard, rhs->children[0]);
    make(Component::TernaryArm, 0, lhs, rhs->children[1]);
    make(Component::TernaryArm, 1, lhs, rhs->children[2]);
    return;
  }
  make(base, -1, lhs, rhs);
}

Lhs written(const FunctionDef& f, const Stmt& s) {
  const auto& var = f.variables[s.target_slot];
  if (s.index) {
    return Lhs{fresh_name(f, s.scope, "elem_" + std::to_string(s.line)), var.type.scalar, -1};
  }
  bool in_scope = std::find(s.scope.begin(), s.scope.end(), s.target_slot) != s.scope.end();
  return Lhs{var.name, var.type.scalar, in_scope ? s.target_slot : -1};
}

}  // namespace

std::vector<NormalizedTarget> normalize(const FunctionDef& f, const Stmt& s) {
  std::vector<NormalizedTarget> out;
  switch (s.kind) {
    case StmtKind::Assign:
      emit(out, f, s, Component::AssignRHS, written(f, s), s.expr);
      break;
    case StmtKind::Decl:
      if (!s.expr) throw UnsupportedStatement(s.line, "declaration without initializer");
      emit(out, f, s, Component::AssignRHS, written(f, s), s.expr);
      break;
    case StmtKind::If:
    case StmtKind::While:
      emit(out, f, s, Component::BranchPredicate,
           Lhs{fresh_name(f, s.scope, "branch_" + std::to_string(s.line)), Scalar::Bool, -1}, s.expr);
      break;
    case StmtKind::For: {
      Stmt init = *s.init;
      init.scope = s.scope;
      Stmt update = *s.update;
      update.scope = s.scope;
      update.line = init.line = s.line;
      emit(out, f, init, Component::ForInit, written(f, init), init.expr);
      emit(out, f, s, Component::ForCond,
           Lhs{fresh_name(f, s.scope, "branch_" + std::to_string(s.line)), Scalar::Bool, -1}, s.expr);
      emit(out, f, update, Component::ForUpd, written(f, update), update.expr);
      break;
    }
    case StmtKind::Return:
      if (!s.expr) throw UnsupportedStatement(s.line, "return without a value");
      emit(out, f, s, Component::ReturnExpr,
           Lhs{fresh_name(f, s.scope, "ret_" + std::to_string(s.line)), s.expr->type, -1}, s.expr);
      break;
    case StmtKind::Print:
      emit(out, f, s, Component::PrintExpr,
           Lhs{fresh_name(f, s.scope, "print_" + std::to_string(s.line)), s.expr->type, -1}, s.expr);
      break;
    case StmtKind::Block:
      throw UnsupportedStatement(s.line, "block statements have no expression to analyze");
  }
  return out;
}

}  // namespace minthint::lang
