#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "minthint/driver/config.hpp"
#include "minthint/hints/rank.hpp"
#include "minthint/localize/ochiai.hpp"
#include "minthint/repair/dataset.hpp"
#include "minthint/stats/likelihood.hpp"

namespace minthint::driver {

/// What happened at one normalized target.
struct TargetReport {
  lang::NormalizedTarget target;
  transformer::OutcomeKind outcome = transformer::OutcomeKind::Discarded;
  std::string reason;  // why it was discarded
  std::vector<transformer::TestDerivation> log;
  transformer::StateTransformer f;
  std::size_t space_size = 0;
  std::size_t max_size = 0;  // size bound actually used
  std::size_t columns = 0;
  double rhs_likelihood = 0.0;
  double top_likelihood = 0.0;
  std::vector<hints::Hint> hints;
  // Kept only when PipelineOptions::keep_artifacts is set.
  std::shared_ptr<const repair::RepairSpace> space;
  std::shared_ptr<const repair::Dataset> data;
  std::vector<double> likelihoods;
};

struct StatementReport {
  int line = 0;
  double suspiciousness = 0.0;
  std::string note;  // set when the statement cannot be analyzed
  std::vector<TargetReport> targets;

  /// Has hints, all of them "Retain the statement".
  bool eliminated() const;
  /// Every target's transformer was discarded.
  bool discarded() const;
  bool timed_out() const;
};

struct PipelineResult {
  localize::SuspiciousList localization;
  std::vector<StatementReport> statements;  // localization order
  std::vector<hints::Hint> hints;  // ranked
};

struct PipelineOptions {
  bool keep_artifacts = false;
  /// Applied to each derived transformer before the dataset is built.
  std::function<transformer::StateTransformer(const lang::NormalizedTarget&, transformer::StateTransformer)>
      transform;
};

/// Localizes, derives transformers, builds repair spaces and mints hints for
/// every top-k statement, then ranks all hints together.
/// Throws NoFailingTests when every test passes.
PipelineResult run_pipeline(const lang::Program& p, const exec::TestSuite& tests, const Config& cfg,
                            const PipelineOptions& opts = {});

/// Hints for a single target whose transformer is already known.
TargetReport analyze_target(const lang::Program& p, const lang::NormalizedTarget& target,
                            const transformer::StateTransformer& f, const Config& cfg, bool keep_artifacts = false);

}  // namespace minthint::driver
