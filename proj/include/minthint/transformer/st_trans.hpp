#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minthint/transformer/angelic.hpp"

namespace minthint::transformer {

enum class Provenance { FromPassing, FromFailingAngelic };

struct TransformerPair {
  exec::StatePair states;
  Provenance provenance = Provenance::FromPassing;
  std::string test_id;
  int execution = 0;  // dynamic execution index within the test
};

/// The input/output specification at one target: what the statement should
/// compute on each observed state.
struct StateTransformer {
  std::vector<TransformerPair> pairs;
  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
};

nlohmann::json to_json(const StateTransformer& f);

enum class OutcomeKind { Derived, RetainStatement, Discarded };

const char* outcome_name(OutcomeKind k);

struct TestDerivation {
  std::string test_id;
  bool passing = false;
  SearchStatus status = SearchStatus::NotTraversed;  // failing tests only
  std::size_t pairs = 0;
};

struct DerivationOutcome {
  OutcomeKind kind = OutcomeKind::Discarded;
  StateTransformer f;
  std::string reason;  // Discarded only
  std::vector<TestDerivation> log;  // per test considered, suite order
};

struct TransformerConfig {
  AngelicConfig angelic;
  double passing_fraction = 1.0;  // keep the first ceil(F * n) passing tests
  unsigned jobs = 1;
};

/// Derives the transformer at `target`. Passing tests contribute observed
/// pairs; failing tests contribute pairs replayed under their first angelic
/// witness. Tests that never reach the target are ignored. `passed` may carry
/// precomputed verdicts (suite order); when empty the tests are run here.
DerivationOutcome st_trans(const lang::Program& p, const lang::NormalizedTarget& target,
                           const exec::TestSuite& tests, const TransformerConfig& cfg = {},
                           const std::vector<bool>& passed = {});

/// Replaces the LHS value of round(fraction * n) pairs, chosen by a seeded
/// shuffle, with a different value of the same type.
StateTransformer inject_noise(const StateTransformer& f, const lang::NormalizedTarget& target, double fraction,
                              std::uint64_t seed);

}  // namespace minthint::transformer
