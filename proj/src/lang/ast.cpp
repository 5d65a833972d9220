#include "minthint/lang/ast.hpp"

#include <cassert>
#include <functional>

namespace minthint::lang {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

ExprPtr finish(Expr e) {
  std::size_t h = mix(static_cast<std::size_t>(e.kind), static_cast<std::size_t>(e.type));
  h = mix(h, e.op);
  h = mix(h, std::hash<std::int64_t>{}(e.value));
  h = mix(h, std::hash<std::string>{}(e.name));
  h = mix(h, static_cast<std::size_t>(e.slot + 1));
  e.nodes = 1;
  for (const auto& c : e.children) {
    h = mix(h, c->hash);
    e.nodes += c->nodes;
  }
  e.hash = h;
  return std::make_shared<const Expr>(std::move(e));
}

}  // namespace

std::string_view scalar_name(Scalar s) {
  switch (s) {
    case Scalar::Bool: return "bool";
    case Scalar::Int: return "int";
    case Scalar::Char: return "char";
    case Scalar::Void: return "void";
  }
  return "?";
}

std::string Type::to_string() const {
  std::string out(scalar_name(scalar));
  if (is_array) {
    out += "[";
    if (length) out += std::to_string(*length);
    out += "]";
  }
  return out;
}

std::string_view op_symbol(UnaryOp op) { return op == UnaryOp::Not ? "!" : "-"; }

std::string_view op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Mod: return "%";
    case BinaryOp::Eq: return "==";
    case BinaryOp::Ne: return "!=";
    case BinaryOp::Lt: return "<";
    case BinaryOp::Le: return "<=";
    case BinaryOp::Gt: return ">";
    case BinaryOp::Ge: return ">=";
    case BinaryOp::And: return "&&";
    case BinaryOp::Or: return "||";
  }
  return "?";
}

bool is_comparison(BinaryOp op) { return op >= BinaryOp::Eq && op <= BinaryOp::Ge; }
bool is_arithmetic(BinaryOp op) { return op <= BinaryOp::Mod; }
bool is_logical(BinaryOp op) { return op == BinaryOp::And || op == BinaryOp::Or; }

std::optional<Scalar> binary_result(BinaryOp op, Scalar lhs, Scalar rhs) {
  if (lhs != rhs || lhs == Scalar::Void) return std::nullopt;
  if (is_arithmetic(op)) {
    if (lhs == Scalar::Int) return Scalar::Int;
    return std::nullopt;
  }
  if (is_logical(op)) {
    if (lhs == Scalar::Bool) return Scalar::Bool;
    return std::nullopt;
  }
  if (op == BinaryOp::Eq || op == BinaryOp::Ne) return Scalar::Bool;
  // Ordered comparisons need an ordered numeric domain.
  if (lhs == Scalar::Int || lhs == Scalar::Char) return Scalar::Bool;
  return std::nullopt;
}

std::optional<Scalar> unary_result(UnaryOp op, Scalar operand) {
  if (op == UnaryOp::Not && operand == Scalar::Bool) return Scalar::Bool;
  if (op == UnaryOp::Neg && operand == Scalar::Int) return Scalar::Int;
  return std::nullopt;
}

ExprPtr Expr::constant(Scalar type, std::int64_t value) {
  Expr e;
  e.kind = ExprKind::Const;
  e.type = type;
  e.value = value;
  return finish(std::move(e));
}

ExprPtr Expr::variable(std::string name, int slot, Scalar type) {
  Expr e;
  e.kind = ExprKind::Var;
  e.type = type;
  e.name = std::move(name);
  e.slot = slot;
  return finish(std::move(e));
}

ExprPtr Expr::index(std::string array, int slot, Scalar elem, ExprPtr idx) {
  Expr e;
  e.kind = ExprKind::Index;
  e.type = elem;
  e.name = std::move(array);
  e.slot = slot;
  e.children.push_back(std::move(idx));
  return finish(std::move(e));
}

ExprPtr Expr::unary(UnaryOp op, ExprPtr operand) {
  auto type = unary_result(op, operand->type);
  assert(type);
  Expr e;
  e.kind = ExprKind::Unary;
  e.type = *type;
  e.op = static_cast<std::uint8_t>(op);
  e.children.push_back(std::move(operand));
  return finish(std::move(e));
}

ExprPtr Expr::binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  auto type = binary_result(op, lhs->type, rhs->type);
  assert(type);
  Expr e;
  e.kind = ExprKind::Binary;
  e.type = *type;
  e.op = static_cast<std::uint8_t>(op);
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return finish(std::move(e));
}

ExprPtr Expr::ternary(ExprPtr cond, ExprPtr then_e, ExprPtr else_e) {
  assert(cond->type == Scalar::Bool && then_e->type == else_e->type);
  Expr e;
  e.kind = ExprKind::Ternary;
  e.type = then_e->type;
  e.children = {std::move(cond), std::move(then_e), std::move(else_e)};
  return finish(std::move(e));
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (&a == &b) return true;
  if (a.hash != b.hash || a.kind != b.kind || a.type != b.type || a.op != b.op ||
      a.value != b.value || a.slot != b.slot || a.name != b.name ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!structurally_equal(*a.children[i], *b.children[i])) return false;
  }
  return true;
}

const FunctionDef& Program::entry() const {
  for (const auto& f : functions) {
    if (f.name == "main") return f;
  }
  return functions.front();
}

namespace {

void collect(const std::vector<Stmt>& stmts, std::vector<const Stmt*>& out) {
  for (const auto& s : stmts) {
    out.push_back(&s);
    collect(s.body, out);
    collect(s.else_body, out);
  }
}

}  // namespace

std::vector<const Stmt*> Program::statements() const {
  std::vector<const Stmt*> out;
  for (const auto& f : functions) collect(f.body, out);
  return out;
}

const FunctionDef* Program::function_of(int line) const {
  for (const auto& f : functions) {
    std::vector<const Stmt*> stmts;
    collect(f.body, stmts);
    for (const auto* s : stmts) {
      if (s->line == line) return &f;
    }
  }
  return nullptr;
}

const Stmt* Program::statement_at(int line) const {
  for (const auto* s : statements()) {
    if (s->line == line) return s;
  }
  return nullptr;
}

bool is_executable(const Stmt& s) {
  if (s.kind == StmtKind::Block) return false;
  if (s.kind == StmtKind::Decl) return s.expr != nullptr;
  return true;
}

}  // namespace minthint::lang
