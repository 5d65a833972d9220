#include "minthint/driver/noise.hpp"

#include <algorithm>

namespace minthint::driver {

namespace {

std::vector<lang::NormalizedTarget> targets_at(const lang::Program& p, int line) {
  const auto* stmt = p.statement_at(line);
  if (!stmt) throw Error("no statement at line " + std::to_string(line));
  return lang::normalize(*p.function_of(line), *stmt);
}

bool same_pair(const exec::StatePair& a, const exec::StatePair& b) {
  return a.before.same_as(b.before) && a.after.same_as(b.after);
}

}  // namespace

transformer::StateTransformer concrete_transformer(const lang::Program& repaired, const lang::NormalizedTarget& target,
                                                   const exec::TestSuite& tests, std::uint64_t step_limit) {
  transformer::StateTransformer f;
  for (const auto& t : tests) {
    std::vector<exec::StatePair> states;
    try {
      states = exec::observe_states(repaired, target, t, step_limit);
    } catch (const NotExecuted&) {
      continue;
    }
    int n = 0;
    for (auto& s : states) f.pairs.push_back({std::move(s), transformer::Provenance::FromPassing, t.id, n++});
  }
  return f;
}

NoiseReport estimate_noise(const lang::Program& faulty, const lang::Program& repaired, int line,
                           const exec::TestSuite& tests, const Config& cfg) {
  for (const auto& t : tests) {
    if (!exec::run_test(repaired, t, {cfg.angelic.run_step_limit}).passed) {
      throw RepairedStillFails("repaired program fails test " + t.id);
    }
  }
  auto faulty_targets = targets_at(faulty, line);
  auto repaired_targets = targets_at(repaired, line);
  NoiseReport r;
  for (const auto& target : faulty_targets) {
    auto peer = std::find_if(repaired_targets.begin(), repaired_targets.end(),
                             [&](const lang::NormalizedTarget& o) { return o.same_site(target); });
    if (peer == repaired_targets.end()) throw Error("repaired program lacks " + target.label());
    auto d = transformer::st_trans(faulty, target, tests, cfg.transformer());
    bool any_failing = std::any_of(d.log.begin(), d.log.end(), [](const auto& l) { return !l.passing; });
    // With no failing test at the site, the faulty side is just its observed pairs.
    if (!any_failing) d.f = concrete_transformer(faulty, target, tests, cfg.angelic.run_step_limit);
    auto clean = concrete_transformer(repaired, *peer, tests, cfg.angelic.run_step_limit);
    for (const auto& pair : d.f.pairs) {
      ++r.pairs;
      bool found = std::any_of(clean.pairs.begin(), clean.pairs.end(),
                               [&](const transformer::TransformerPair& c) { return same_pair(pair.states, c.states); });
      if (!found) ++r.noisy;
    }
  }
  r.percentage = r.pairs == 0 ? 0.0 : 100.0 * static_cast<double>(r.noisy) / static_cast<double>(r.pairs);
  return r;
}

}  // namespace minthint::driver
