#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

#include "minthint/exec/value.hpp"
#include "minthint/lang/ast.hpp"

namespace minthint::exec {

/// Raised by expression evaluation; the interpreter turns it into a failing verdict.
struct RuntimeFault {
  std::string_view token;  // "division-by-zero", "index-out-of-bounds", "overflow", "step-budget"
};

namespace detail {

template <class Op>
std::int64_t checked(Op op, std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (op(a, b, &r)) throw RuntimeFault{"overflow"};
  return r;
}

}  // namespace detail

/// Evaluates `e` with C semantics (short-circuit logic, truncating division).
/// `at(slot)` must return the `const Value&` bound to a variable slot.
template <class Slots>
std::int64_t eval_expr(const lang::Expr& e, const Slots& at) {
  using lang::BinaryOp;
  using lang::ExprKind;
  switch (e.kind) {
    case ExprKind::Const: return e.value;
    case ExprKind::Var: return at(e.slot).scalar;
    case ExprKind::Index: {
      const Value& arr = at(e.slot);
      std::int64_t i = eval_expr(*e.children[0], at);
      if (i < 0 || static_cast<std::uint64_t>(i) >= arr.elems.size()) throw RuntimeFault{"index-out-of-bounds"};
      return arr.elems[static_cast<std::size_t>(i)];
    }
    case ExprKind::Unary: {
      std::int64_t v = eval_expr(*e.children[0], at);
      if (e.unary_op() == lang::UnaryOp::Not) return v ? 0 : 1;
      if (v == std::numeric_limits<std::int64_t>::min()) throw RuntimeFault{"overflow"};
      return -v;
    }
    case ExprKind::Ternary:
      return eval_expr(*e.children[0], at) ? eval_expr(*e.children[1], at) : eval_expr(*e.children[2], at);
    case ExprKind::Binary: break;
  }
  BinaryOp op = e.binary_op();
  std::int64_t a = eval_expr(*e.children[0], at);
  if (op == BinaryOp::And) return a ? (eval_expr(*e.children[1], at) != 0) : 0;
  if (op == BinaryOp::Or) return a ? 1 : (eval_expr(*e.children[1], at) != 0);
  std::int64_t b = eval_expr(*e.children[1], at);
  using I = std::int64_t;
  switch (op) {
    case BinaryOp::Add: return detail::checked([](I x, I y, I* r) { return __builtin_add_overflow(x, y, r); }, a, b);
    case BinaryOp::Sub: return detail::checked([](I x, I y, I* r) { return __builtin_sub_overflow(x, y, r); }, a, b);
    case BinaryOp::Mul: return detail::checked([](I x, I y, I* r) { return __builtin_mul_overflow(x, y, r); }, a, b);
    case BinaryOp::Div:
    case BinaryOp::Mod:
      if (b == 0) throw RuntimeFault{"division-by-zero"};
      if (a == std::numeric_limits<std::int64_t>::min() && b == -1) throw RuntimeFault{"overflow"};
      return op == BinaryOp::Div ? a / b : a % b;
    case BinaryOp::Eq: return a == b;
    case BinaryOp::Ne: return a != b;
    case BinaryOp::Lt: return a < b;
    case BinaryOp::Le: return a <= b;
    case BinaryOp::Gt: return a > b;
    case BinaryOp::Ge: return a >= b;
    default: break;
  }
  return 0;
}

}  // namespace minthint::exec
