#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minthint/exec/testcase.hpp"
#include "minthint/exec/value.hpp"
#include "minthint/lang/normalize.hpp"

namespace minthint::exec {

using Frame = std::vector<Value>;  // indexed by variable slot

/// Hook on the evaluation site of one normalized target.
class Probe {
 public:
  virtual ~Probe() = default;
  /// Called when execution reaches the site, before its expression is
  /// evaluated. A returned value is used instead of evaluating the expression.
  virtual std::optional<std::int64_t> intercept(const Frame&) { return std::nullopt; }
  /// Called with the value the site produced (evaluated or intercepted).
  virtual void record(const Frame&, std::int64_t) {}
};

inline constexpr std::uint64_t kDefaultStepLimit = 1'000'000;

struct RunOptions {
  std::uint64_t step_limit = kDefaultStepLimit;
  const lang::NormalizedTarget* target = nullptr;
  Probe* probe = nullptr;
  std::vector<int>* trace = nullptr;  // every executed statement line, in order
  std::uint64_t* step_sink = nullptr;  // accumulates steps, also when a probe aborts the run
};

struct RunResult {
  std::vector<Value> output;  // printed values, then the return value
  std::optional<std::string> fault;
  std::uint64_t steps = 0;
  std::vector<int> covered;  // lines of executed statements, ascending

  bool covers(int line) const;
  /// Output as JSON; a fault appends the token "<fault:NAME>".
  nlohmann::json output_json() const;
};

struct Verdict {
  bool passed = false;
  RunResult run;
};

/// Runs the entry function on the given arguments. Deterministic.
RunResult execute(const lang::Program& p, const std::vector<Value>& args, const RunOptions& opts = {});

/// Pass iff the run is fault-free and its output equals the expectation exactly.
Verdict run_test(const lang::Program& p, const TestCase& t, const RunOptions& opts = {});

bool output_matches(const RunResult& r, const TestCase& t);

/// Builds the state at a target from a frame: the target's scope, in scope order.
ProgramState capture_state(const lang::FunctionDef& f, const lang::NormalizedTarget& target, const Frame& env);

/// The output state: `before` with the target's LHS set to `value`.
ProgramState apply_lhs(const lang::NormalizedTarget& target, const ProgramState& before, std::int64_t value);

struct StatePair {
  ProgramState before;
  ProgramState after;
};

/// One pair per dynamic execution of the target, in execution order.
/// Throws PreconditionError when the test fails and NotExecuted when it never
/// reaches the target.
std::vector<StatePair> observe_states(const lang::Program& p, const lang::NormalizedTarget& target,
                                      const TestCase& t, std::uint64_t step_limit = kDefaultStepLimit);

}  // namespace minthint::exec
