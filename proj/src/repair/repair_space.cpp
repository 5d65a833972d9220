#include "minthint/repair/repair_space.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "minthint/error.hpp"
#include "minthint/lang/expr_utils.hpp"

namespace minthint::repair {

using lang::BinaryOp;
using lang::Expr;
using lang::ExprPtr;
using lang::Scalar;

std::vector<lang::Variable> vars_in_scope(const lang::Program& p, const lang::NormalizedTarget& target) {
  const auto* fn = p.function_of(target.line);
  if (!fn) throw PreconditionError("no statement at line " + std::to_string(target.line));
  std::vector<lang::Variable> out;
  for (int slot : target.scope) out.push_back(fn->variables[slot]);
  return out;
}

std::vector<ExprPtr> constant_pool(const lang::FunctionDef& f) {
  std::vector<std::int64_t> ints{0, 1, -1};
  std::vector<std::int64_t> more_ints, chars;
  for (const auto& c : lang::constants_in(f)) {
    if (c->type == Scalar::Int && std::find(ints.begin(), ints.end(), c->value) == ints.end()) {
      more_ints.push_back(c->value);
    } else if (c->type == Scalar::Char) {
      chars.push_back(c->value);
    }
  }
  std::sort(more_ints.begin(), more_ints.end());
  more_ints.erase(std::unique(more_ints.begin(), more_ints.end()), more_ints.end());
  std::sort(chars.begin(), chars.end());
  chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
  ints.insert(ints.end(), more_ints.begin(), more_ints.end());

  std::vector<ExprPtr> out;
  for (auto v : ints) out.push_back(Expr::constant(Scalar::Int, v));
  for (auto c : chars) out.push_back(Expr::constant(Scalar::Char, c));
  out.push_back(Expr::constant(Scalar::Bool, 0));
  out.push_back(Expr::constant(Scalar::Bool, 1));
  return out;
}

namespace {

constexpr std::array kBinaryOrder{
    BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul, BinaryOp::Div, BinaryOp::Mod, BinaryOp::Eq, BinaryOp::Le,
    BinaryOp::Lt,  BinaryOp::Ge,  BinaryOp::Gt,  BinaryOp::Ne,  BinaryOp::And, BinaryOp::Or,
};

class Enumerator {
 public:
  Enumerator(std::size_t cap) : cap_(cap) {}

  // `leaves` are the size-1 expressions in order; composites are built on top.
  std::vector<ExprPtr> run(const std::vector<ExprPtr>& leaves, std::size_t max_size) {
    levels_.assign(max_size + 1, {});
    for (const auto& l : leaves) add(1, l);
    for (std::size_t s = 2; s <= max_size; ++s) {
      for (const auto& e : levels_[s - 1]) {
        if (e->type == Scalar::Bool) add(s, Expr::unary(lang::UnaryOp::Not, e));
        if (e->type == Scalar::Int) add(s, Expr::unary(lang::UnaryOp::Neg, e));
      }
      for (std::size_t ls = 1; ls + 1 < s; ++ls) {
        std::size_t rs = s - 1 - ls;
        for (const auto& a : levels_[ls]) {
          for (const auto& b : levels_[rs]) {
            for (auto op : kBinaryOrder) {
              if (lang::binary_result(op, a->type, b->type)) add(s, Expr::binary(op, a, b));
            }
          }
        }
      }
      for (std::size_t cs = 1; cs + 2 < s; ++cs) {
        for (std::size_t as = 1; cs + as + 1 < s; ++as) {
          std::size_t bs = s - 1 - cs - as;
          for (const auto& c : levels_[cs]) {
            if (c->type != Scalar::Bool || lang::is_constant_expr(*c)) continue;
            for (const auto& a : levels_[as]) {
              for (const auto& b : levels_[bs]) {
                if (a->type == b->type) add(s, Expr::ternary(c, a, b));
              }
            }
          }
        }
      }
    }
    std::vector<ExprPtr> out;
    for (auto& level : levels_) out.insert(out.end(), level.begin(), level.end());
    return out;
  }

 private:
  void add(std::size_t size, ExprPtr e) {
    if (size > 1 && lang::is_constant_expr(*e)) return;
    if (++count_ > cap_) {
      throw SpaceTooLarge("repair space exceeds " + std::to_string(cap_) + " expressions");
    }
    levels_[size].push_back(std::move(e));
  }

  std::size_t cap_;
  std::size_t count_ = 0;
  std::vector<std::vector<ExprPtr>> levels_;
};

}  // namespace

std::vector<ExprPtr> enum_exps(const std::vector<lang::Variable>& vars, const std::vector<ExprPtr>& constants,
                               const EnumOptions& opts) {
  if (opts.max_size < 1) throw PreconditionError("expression size bound must be at least 1");
  std::vector<ExprPtr> scalars;
  bool has_array = false;
  for (const auto& v : vars) {
    if (v.type.is_array) {
      has_array = true;
    } else {
      scalars.push_back(Expr::variable(v.name, v.slot, v.type.scalar));
    }
  }
  std::vector<ExprPtr> leaves = scalars;
  if (has_array) {
    std::vector<ExprPtr> index_leaves = scalars;
    index_leaves.insert(index_leaves.end(), constants.begin(), constants.end());
    std::vector<ExprPtr> indices;
    for (auto& e : Enumerator(opts.cap).run(index_leaves, opts.index_size)) {
      if (e->type == Scalar::Int) indices.push_back(std::move(e));
    }
    for (const auto& v : vars) {
      if (!v.type.is_array) continue;
      for (const auto& idx : indices) {
        auto read = Expr::index(v.name, v.slot, v.type.scalar, idx);
        if (!opts.keep_read || opts.keep_read(*read)) leaves.push_back(std::move(read));
      }
    }
  }
  leaves.insert(leaves.end(), constants.begin(), constants.end());
  return Enumerator(opts.cap).run(leaves, opts.max_size);
}

RepairSpace build_repair_space(const lang::Program& p, const lang::NormalizedTarget& target,
                               const EnumOptions& opts) {
  const auto* fn = p.function_of(target.line);
  if (!fn) throw PreconditionError("no statement at line " + std::to_string(target.line));
  RepairSpace r;
  r.rhs = target.rhs;
  r.max_size = opts.max_size;
  std::unordered_set<ExprPtr, lang::ExprHash, lang::ExprEqual> s_members;
  for (const auto& e : lang::subexps(target.rhs)) {
    s_members.insert(e);
    r.candidates.push_back(Candidate{e, true, false, r.candidates.size()});
  }
  auto enumerated = enum_exps(vars_in_scope(p, target), constant_pool(*fn), opts);
  std::unordered_set<ExprPtr, lang::ExprHash, lang::ExprEqual> e_members(enumerated.begin(), enumerated.end());
  for (auto& c : r.candidates) c.in_e = e_members.count(c.expr) > 0;
  for (auto& e : enumerated) {
    if (s_members.count(e)) continue;
    r.candidates.push_back(Candidate{std::move(e), false, true, r.candidates.size()});
  }
  return r;
}

}  // namespace minthint::repair
