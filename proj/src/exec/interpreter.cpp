#include "minthint/exec/interpreter.hpp"

#include <algorithm>

#include "minthint/error.hpp"
#include "minthint/exec/eval.hpp"

namespace minthint::exec {

using lang::Component;
using lang::Expr;
using lang::ExprKind;
using lang::Stmt;
using lang::StmtKind;

namespace {

struct Returned {};

class Machine {
 public:
  Machine(const lang::FunctionDef& fn, const RunOptions& opts, RunResult& out)
      : fn_(fn), opts_(opts), out_(out), env_(fn.variables.size()) {}

  void run(const std::vector<Value>& args) {
    for (std::size_t i = 0; i < fn_.params.size(); ++i) env_[fn_.params[i]] = args.at(i);
    try {
      block(fn_.body);
    } catch (const Returned&) {
    }
  }

  std::vector<char> hit_lines;

 private:
  std::int64_t eval(const Expr& e) const {
    return eval_expr(e, [this](int slot) -> const Value& { return env_[slot]; });
  }

  void step() {
    if (opts_.step_sink) ++*opts_.step_sink;
    if (++out_.steps > opts_.step_limit) throw RuntimeFault{"step-budget"};
  }

  void enter(const Stmt& s) {
    step();
    auto line = static_cast<std::size_t>(s.line);
    if (hit_lines.size() <= line) hit_lines.resize(line + 1, 0);
    hit_lines[line] = 1;
    if (opts_.trace) opts_.trace->push_back(s.line);
  }

  bool watched(int line, Component c, int arm) const {
    const auto* t = opts_.target;
    return t && t->line == line && t->component == c && t->arm == arm;
  }

  std::int64_t site(int line, Component c, int arm, const Expr& e) {
    if (!opts_.probe || !watched(line, c, arm)) return eval(e);
    std::optional<std::int64_t> forced = opts_.probe->intercept(env_);
    std::int64_t v = forced ? *forced : eval(e);
    opts_.probe->record(env_, v);
    return v;
  }

  // Assignment, return and print operands with a top-level ternary are
  // analyzed as guard plus arms, so they are probed that way too.
  std::int64_t operand(const Stmt& s, Component base, const lang::ExprPtr& rhs) {
    if (rhs->kind != ExprKind::Ternary) return site(s.line, base, -1, *rhs);
    bool g = site(s.line, Component::TernaryGuard, -1, *rhs->children[0]) != 0;
    return site(s.line, Component::TernaryArm, g ? 0 : 1, *rhs->children[g ? 1 : 2]);
  }

  void store(const Stmt& s, std::int64_t v) {
    Value& dst = env_[s.target_slot];
    if (!s.index) {
      dst.scalar = v;
      return;
    }
    std::int64_t i = eval(*s.index);
    if (i < 0 || static_cast<std::uint64_t>(i) >= dst.elems.size()) throw RuntimeFault{"index-out-of-bounds"};
    dst.elems[static_cast<std::size_t>(i)] = v;
  }

  void block(const std::vector<Stmt>& stmts) {
    for (const auto& s : stmts) stmt(s);
  }

  void stmt(const Stmt& s) {
    switch (s.kind) {
      case StmtKind::Block:
        block(s.body);
        return;
      case StmtKind::Decl: {
        const auto& var = fn_.variables[s.target_slot];
        if (var.type.is_array) {
          env_[s.target_slot] = Value::array(var.type.scalar, std::vector<std::int64_t>(*var.type.length, 0));
          return;
        }
        if (!s.expr) {
          env_[s.target_slot] = Value::of(var.type.scalar, 0);
          return;
        }
        enter(s);
        env_[s.target_slot] = Value::of(var.type.scalar, operand(s, Component::AssignRHS, s.expr));
        return;
      }
      case StmtKind::Assign:
        enter(s);
        store(s, operand(s, Component::AssignRHS, s.expr));
        return;
      case StmtKind::If:
        enter(s);
        if (site(s.line, Component::BranchPredicate, -1, *s.expr)) {
          block(s.body);
        } else {
          block(s.else_body);
        }
        return;
      case StmtKind::While:
        enter(s);
        while (site(s.line, Component::BranchPredicate, -1, *s.expr)) {
          block(s.body);
          step();
        }
        return;
      case StmtKind::For:
        enter(s);
        store(*s.init, site(s.line, Component::ForInit, -1, *s.init->expr));
        while (true) {
          step();
          if (!site(s.line, Component::ForCond, -1, *s.expr)) break;
          block(s.body);
          store(*s.update, site(s.line, Component::ForUpd, -1, *s.update->expr));
        }
        return;
      case StmtKind::Return:
        enter(s);
        if (s.expr) out_.output.push_back(Value::of(s.expr->type, operand(s, Component::ReturnExpr, s.expr)));
        throw Returned{};
      case StmtKind::Print:
        enter(s);
        out_.output.push_back(Value::of(s.expr->type, operand(s, Component::PrintExpr, s.expr)));
        return;
    }
  }

  const lang::FunctionDef& fn_;
  const RunOptions& opts_;
  RunResult& out_;
  Frame env_;
};

}  // namespace

bool RunResult::covers(int line) const { return std::binary_search(covered.begin(), covered.end(), line); }

nlohmann::json RunResult::output_json() const {
  auto out = nlohmann::json::array();
  for (const auto& v : output) out.push_back(to_json(v));
  if (fault) out.push_back("<fault:" + *fault + ">");
  return out;
}

RunResult execute(const lang::Program& p, const std::vector<Value>& args, const RunOptions& opts) {
  const auto& fn = p.entry();
  if (args.size() != fn.params.size()) throw PreconditionError("wrong number of arguments for " + fn.name);
  RunResult out;
  Machine m(fn, opts, out);
  try {
    m.run(args);
  } catch (const RuntimeFault& f) {
    out.fault = std::string(f.token);
  }
  for (std::size_t line = 0; line < m.hit_lines.size(); ++line) {
    if (m.hit_lines[line]) out.covered.push_back(static_cast<int>(line));
  }
  return out;
}

bool output_matches(const RunResult& r, const TestCase& t) { return !r.fault && r.output == t.expect; }

Verdict run_test(const lang::Program& p, const TestCase& t, const RunOptions& opts) {
  Verdict v;
  v.run = execute(p, t.args, opts);
  v.passed = output_matches(v.run, t);
  return v;
}

ProgramState capture_state(const lang::FunctionDef& f, const lang::NormalizedTarget& target, const Frame& env) {
  ProgramState s;
  s.vars.reserve(target.scope.size());
  for (int slot : target.scope) s.vars.push_back(Binding{f.variables[slot].name, slot, env[slot]});
  return s;
}

ProgramState apply_lhs(const lang::NormalizedTarget& target, const ProgramState& before, std::int64_t value) {
  ProgramState after = before;
  if (target.lhs_slot >= 0) {
    for (auto& b : after.vars) {
      if (b.slot == target.lhs_slot) {
        b.value.scalar = value;
        return after;
      }
    }
  }
  after.vars.push_back(Binding{target.lhs, -1, Value::of(target.lhs_type, value)});
  return after;
}

namespace {

class Recorder : public Probe {
 public:
  Recorder(const lang::FunctionDef& f, const lang::NormalizedTarget& t) : fn_(f), target_(t) {}
  void record(const Frame& env, std::int64_t v) override {
    auto before = capture_state(fn_, target_, env);
    auto after = apply_lhs(target_, before, v);
    pairs.push_back(StatePair{std::move(before), std::move(after)});
  }
  std::vector<StatePair> pairs;

 private:
  const lang::FunctionDef& fn_;
  const lang::NormalizedTarget& target_;
};

}  // namespace

std::vector<StatePair> observe_states(const lang::Program& p, const lang::NormalizedTarget& target,
                                      const TestCase& t, std::uint64_t step_limit) {
  Recorder rec(p.entry(), target);
  RunOptions opts;
  opts.step_limit = step_limit;
  opts.target = &target;
  opts.probe = &rec;
  auto v = run_test(p, t, opts);
  if (!v.passed) throw PreconditionError("test '" + t.id + "' does not pass");
  if (rec.pairs.empty()) {
    throw NotExecuted("test '" + t.id + "' does not reach line " + std::to_string(target.line));
  }
  return std::move(rec.pairs);
}

}  // namespace minthint::exec
