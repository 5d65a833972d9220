#pragma once

#include <cstdint>
#include <vector>

#include "minthint/exec/interpreter.hpp"

namespace minthint::transformer {

struct AngelicConfig {
  std::int64_t window_lo = -64;
  std::int64_t window_hi = 64;
  int max_hits = 10;  // dynamic executions searched per test; later ones evaluate normally
  std::uint64_t step_budget = 10'000'000;  // interpreter steps per test, summed over all replays
  std::int64_t time_budget_ms = 5000;  // wall clock per test
  std::uint64_t run_step_limit = exec::kDefaultStepLimit;  // one replay
};

enum class SearchStatus { Witness, NoWitness, Timeout, NotTraversed };

const char* status_name(SearchStatus s);

struct AngelicResult {
  SearchStatus status = SearchStatus::NoWitness;
  std::vector<std::int64_t> values;  // one per searched execution, in order
  std::uint64_t steps = 0;
  std::uint64_t replays = 0;
};

/// Candidate values for the target's LHS, in search order. Bool: false, true.
/// Int: the window plus constants of the program and of the expected output,
/// ordered by magnitude with negatives first. Char: codes 0..127.
std::vector<std::int64_t> value_domain(const lang::Program& p, const lang::NormalizedTarget& target,
                                       const exec::TestCase& t, const AngelicConfig& cfg);

/// Depth-first search, by replay, for LHS values that make `t` pass.
/// Sequences are tried in lexicographic domain order; the first witness wins.
AngelicResult angelic_search(const lang::Program& p, const lang::NormalizedTarget& target, const exec::TestCase& t,
                             const AngelicConfig& cfg = {});

/// Replays `t` with the given forced values and records one state pair per
/// execution of the target. Executions beyond the forced prefix evaluate normally.
struct Replay {
  exec::Verdict verdict;
  std::vector<exec::StatePair> pairs;
};
Replay replay_with(const lang::Program& p, const lang::NormalizedTarget& target, const exec::TestCase& t,
                   const std::vector<std::int64_t>& values, std::uint64_t step_limit = exec::kDefaultStepLimit);

}  // namespace minthint::transformer
