#include "minthint/transformer/st_trans.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "minthint/error.hpp"
#include "minthint/parallel.hpp"

namespace minthint::transformer {

using nlohmann::json;

const char* outcome_name(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::Derived: return "derived";
    case OutcomeKind::RetainStatement: return "retain-statement";
    case OutcomeKind::Discarded: return "discarded";
  }
  return "?";
}

json to_json(const StateTransformer& f) {
  json out = json::array();
  for (const auto& p : f.pairs) {
    out.push_back(json{{"test", p.test_id},
                       {"execution", p.execution},
                       {"provenance", p.provenance == Provenance::FromPassing ? "passing" : "failing-angelic"},
                       {"before", exec::to_json(p.states.before)},
                       {"after", exec::to_json(p.states.after)}});
  }
  return out;
}

namespace {

struct PerTest {
  TestDerivation log;
  std::vector<exec::StatePair> pairs;
  bool considered = false;
};

}  // namespace

DerivationOutcome st_trans(const lang::Program& p, const lang::NormalizedTarget& target,
                           const exec::TestSuite& tests, const TransformerConfig& cfg,
                           const std::vector<bool>& passed_in) {
  std::vector<bool> passed = passed_in;
  if (passed.empty()) {
    passed.resize(tests.size());
    exec::RunOptions opts;
    opts.step_limit = cfg.angelic.run_step_limit;
    parallel_for(tests.size(), cfg.jobs, [&](std::size_t i) { passed[i] = exec::run_test(p, tests[i], opts).passed; });
  }
  if (passed.size() != tests.size()) throw PreconditionError("verdict count does not match the suite");

  // The first ceil(F * n) passing tests, in suite order.
  auto n_pass = static_cast<std::size_t>(std::count(passed.begin(), passed.end(), true));
  auto keep = static_cast<std::size_t>(std::ceil(cfg.passing_fraction * static_cast<double>(n_pass) - 1e-9));
  std::vector<bool> use(tests.size(), true);
  for (std::size_t i = 0, seen = 0; i < tests.size(); ++i) {
    if (passed[i]) use[i] = seen++ < keep;
  }

  std::vector<PerTest> results(tests.size());
  parallel_for(tests.size(), cfg.jobs, [&](std::size_t i) {
    if (!use[i]) return;
    const auto& t = tests[i];
    auto& r = results[i];
    r.log.test_id = t.id;
    r.log.passing = passed[i];
    if (passed[i]) {
      try {
        r.pairs = exec::observe_states(p, target, t, cfg.angelic.run_step_limit);
        r.considered = true;
      } catch (const NotExecuted&) {
      }
    } else {
      auto found = angelic_search(p, target, t, cfg.angelic);
      r.log.status = found.status;
      if (found.status == SearchStatus::NotTraversed) return;
      r.considered = true;
      if (found.status != SearchStatus::Witness) return;
      auto replay = replay_with(p, target, t, found.values, cfg.angelic.run_step_limit);
      if (!replay.verdict.passed) {
        // Replays are deterministic, so this would indicate an interpreter bug.
        throw Error("angelic witness for test '" + t.id + "' does not replay");
      }
      r.pairs = std::move(replay.pairs);
    }
    r.log.pairs = r.pairs.size();
  });

  DerivationOutcome out;
  int failing = 0, witnesses = 0, no_witness = 0, timeouts = 0;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    auto& r = results[i];
    if (!r.considered) continue;
    out.log.push_back(r.log);
    if (!passed[i]) {
      ++failing;
      witnesses += r.log.status == SearchStatus::Witness;
      no_witness += r.log.status == SearchStatus::NoWitness;
      timeouts += r.log.status == SearchStatus::Timeout;
    }
    for (std::size_t k = 0; k < r.pairs.size(); ++k) {
      out.f.pairs.push_back(TransformerPair{std::move(r.pairs[k]),
                                            passed[i] ? Provenance::FromPassing : Provenance::FromFailingAngelic,
                                            tests[i].id, static_cast<int>(k)});
    }
  }

  if (failing == 0) {
    out.kind = OutcomeKind::Discarded;
    out.reason = "no failing test reaches the statement";
  } else if (witnesses > 0) {
    out.kind = OutcomeKind::Derived;
  } else if (no_witness == failing) {
    out.kind = OutcomeKind::RetainStatement;
  } else {
    out.kind = OutcomeKind::Discarded;
    out.reason = timeouts == failing ? "search timed out on every failing test"
                                     : "no witness found and some searches timed out";
  }
  if (out.kind != OutcomeKind::Derived) out.f.pairs.clear();
  return out;
}

StateTransformer inject_noise(const StateTransformer& f, const lang::NormalizedTarget& target, double fraction,
                              std::uint64_t seed) {
  StateTransformer out = f;
  std::vector<std::size_t> order(out.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  auto count = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(out.size())));
  for (std::size_t k = 0; k < count && k < order.size(); ++k) {
    auto& after = out.pairs[order[k]].states.after;
    for (auto& b : after.vars) {
      if (b.name != target.lhs) continue;
      auto& v = b.value.scalar;
      switch (target.lhs_type) {
        case lang::Scalar::Bool: v = !v; break;
        case lang::Scalar::Char: v = (v + 1 + static_cast<std::int64_t>(rng() % 127)) % 128; break;
        default: {
          auto delta = static_cast<std::int64_t>(rng() % 5) + 1;
          v += (rng() & 1) ? delta : -delta;
        }
      }
    }
  }
  return out;
}

}  // namespace minthint::transformer
