#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace minthint::lang {

enum class Scalar : std::uint8_t { Bool, Int, Char, Void };

std::string_view scalar_name(Scalar s);

struct Type {
  Scalar scalar = Scalar::Int;
  bool is_array = false;
  // Declared length; unset for array parameters sized by the test input.
  std::optional<std::size_t> length;

  static Type scalar_of(Scalar s) { return Type{s, false, std::nullopt}; }
  bool same_shape(const Type& other) const {
    return scalar == other.scalar && is_array == other.is_array;
  }
  std::string to_string() const;
};

enum class ExprKind : std::uint8_t { Const, Var, Index, Unary, Binary, Ternary };
enum class UnaryOp : std::uint8_t { Not, Neg };
enum class BinaryOp : std::uint8_t {
  Add, Sub, Mul, Div, Mod,
  Eq, Ne, Lt, Le, Gt, Ge,
  And, Or,
};

std::string_view op_symbol(UnaryOp op);
std::string_view op_symbol(BinaryOp op);
bool is_comparison(BinaryOp op);
bool is_arithmetic(BinaryOp op);
bool is_logical(BinaryOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Immutable expression node. Subtrees are shared freely between trees.
struct Expr {
  ExprKind kind = ExprKind::Const;
  Scalar type = Scalar::Int;  // result type
  std::uint8_t op = 0;  // UnaryOp or BinaryOp for Unary/Binary nodes
  std::int64_t value = 0;  // Const payload (Bool as 0/1, Char as ASCII code)
  std::string name;  // Var / Index: variable name
  int slot = -1;  // Var / Index: function-local variable slot
  std::vector<ExprPtr> children;
  std::size_t nodes = 1;
  std::size_t hash = 0;

  UnaryOp unary_op() const { return static_cast<UnaryOp>(op); }
  BinaryOp binary_op() const { return static_cast<BinaryOp>(op); }

  static ExprPtr constant(Scalar type, std::int64_t value);
  static ExprPtr variable(std::string name, int slot, Scalar type);
  static ExprPtr index(std::string array, int slot, Scalar elem, ExprPtr idx);
  static ExprPtr unary(UnaryOp op, ExprPtr operand);
  static ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
  static ExprPtr ternary(ExprPtr cond, ExprPtr then_e, ExprPtr else_e);
};

/// Result type of a binary operator, or nullopt when the operands are ill-typed.
std::optional<Scalar> binary_result(BinaryOp op, Scalar lhs, Scalar rhs);
std::optional<Scalar> unary_result(UnaryOp op, Scalar operand);

bool structurally_equal(const Expr& a, const Expr& b);

struct ExprHash {
  std::size_t operator()(const ExprPtr& e) const noexcept { return e->hash; }
};
struct ExprEqual {
  bool operator()(const ExprPtr& a, const ExprPtr& b) const noexcept {
    return a == b || structurally_equal(*a, *b);
  }
};

enum class StmtKind : std::uint8_t { Decl, Assign, If, While, For, Return, Print, Block };

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
  StmtKind kind = StmtKind::Block;
  int line = 0;
  // Decl / Assign: the written variable; `index` is set for `a[i] = e`.
  std::string target_name;
  int target_slot = -1;
  ExprPtr index;
  // Decl initializer, Assign RHS, If/While/For condition, Return/Print operand.
  ExprPtr expr;
  // For header.
  StmtPtr init;
  StmtPtr update;
  std::vector<Stmt> body;
  std::vector<Stmt> else_body;
  bool else_if = false;  // else branch was written as `else if`
  // Slots visible at this statement, outermost first, shadowed bindings removed.
  std::vector<int> scope;
};

struct Variable {
  std::string name;
  Type type;
  int slot = -1;
  bool is_param = false;
  int decl_line = 0;
};

struct FunctionDef {
  std::string name;
  Type return_type;
  int line = 0;
  std::vector<int> params;  // slots, in declaration order
  std::vector<Variable> variables;  // indexed by slot
  std::vector<Stmt> body;
};

struct Program {
  std::vector<FunctionDef> functions;

  /// The function tests call: `main` when present, else the first function.
  const FunctionDef& entry() const;
  const FunctionDef* function_of(int line) const;
  const Stmt* statement_at(int line) const;
  /// All statements (excluding For header parts) in source order.
  std::vector<const Stmt*> statements() const;
};

/// True for statements that count as executed for spectra and localization.
bool is_executable(const Stmt& s);

}  // namespace minthint::lang
