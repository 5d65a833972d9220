#include "minthint/driver/pipeline.hpp"

#include <algorithm>

#include "minthint/parallel.hpp"

namespace minthint::driver {

using transformer::OutcomeKind;

bool StatementReport::eliminated() const {
  bool any = false;
  for (const auto& t : targets) {
    for (const auto& h : t.hints) {
      if (h.kind != hints::HintKind::RetainStatement) return false;
      any = true;
    }
  }
  return any;
}

bool StatementReport::discarded() const {
  return !targets.empty() && std::all_of(targets.begin(), targets.end(),
                                         [](const TargetReport& t) { return t.outcome == OutcomeKind::Discarded; });
}

bool StatementReport::timed_out() const {
  for (const auto& t : targets) {
    for (const auto& d : t.log) {
      if (d.status == transformer::SearchStatus::Timeout) return true;
    }
  }
  return false;
}

namespace {

repair::RepairSpace space_within_cap(const lang::Program& p, const lang::NormalizedTarget& target, std::size_t m,
                                     const repair::InputFrames& frames) {
  for (std::size_t size = m;; --size) {
    try {
      repair::EnumOptions opts;
      opts.max_size = size;
      opts.keep_read = [&](const lang::Expr& read) { return frames.evaluate(read).has_value(); };
      return build_repair_space(p, target, opts);
    } catch (const SpaceTooLarge&) {
      if (size == 1) throw;
    }
  }
}

void discard(TargetReport& r, std::string reason) {
  r.outcome = OutcomeKind::Discarded;
  r.reason = std::move(reason);
  r.hints.clear();
}

}  // namespace

TargetReport analyze_target(const lang::Program& p, const lang::NormalizedTarget& target,
                            const transformer::StateTransformer& f, const Config& cfg, bool keep_artifacts) {
  TargetReport r;
  r.target = target;
  r.outcome = OutcomeKind::Derived;
  r.f = f;
  std::shared_ptr<repair::RepairSpace> space;
  try {
    space = std::make_shared<repair::RepairSpace>(space_within_cap(p, target, cfg.m, repair::InputFrames(f)));
  } catch (const SpaceTooLarge& e) {
    discard(r, e.what());
    return r;
  }
  r.space_size = space->candidates.size();
  r.max_size = space->max_size;

  std::shared_ptr<repair::Dataset> data;
  try {
    data = std::make_shared<repair::Dataset>(build_dataset(f, *space, target));
  } catch (const EmptyTransformer& e) {
    discard(r, e.what());
    return r;
  }
  r.columns = data->columns.size();

  std::optional<stats::LikelihoodTable> table;
  try {
    table.emplace(*data);
  } catch (const TooFewSamples&) {
    discard(r, "too few transformer pairs to correlate");
    return r;
  }

  hints::HintContext ctx(target, *space, *data, *table);
  const auto& lik = table->likelihoods();
  r.rhs_likelihood = ctx.likelihood_of(ctx.candidate_of(0));
  r.top_likelihood = lik.empty() ? 0.0 : *std::max_element(lik.begin(), lik.end());
  auto syn = cfg.synthesis();
  r.hints = mint_simple_hints(ctx, syn);
  for (auto& h : mint_compound_hints(ctx, syn)) r.hints.push_back(std::move(h));
  if (keep_artifacts) {
    r.space = space;
    r.data = data;
    r.likelihoods = lik;
  }
  return r;
}

PipelineResult run_pipeline(const lang::Program& p, const exec::TestSuite& tests, const Config& cfg,
                            const PipelineOptions& opts) {
  cfg.validate();
  PipelineResult out;
  auto spectra = exec::collect_spectra(p, tests, cfg.angelic.run_step_limit, cfg.jobs);
  out.localization = localize::rank_statements(spectra, cfg.k);
  out.statements.resize(out.localization.size());

  parallel_for(out.localization.size(), cfg.jobs, [&](std::size_t i) {
    auto& sr = out.statements[i];
    sr.line = out.localization[i].line;
    sr.suspiciousness = out.localization[i].score;
    const auto* fn = p.function_of(sr.line);
    const auto* stmt = p.statement_at(sr.line);
    std::vector<lang::NormalizedTarget> targets;
    try {
      targets = lang::normalize(*fn, *stmt);
    } catch (const UnsupportedStatement& e) {
      sr.note = e.what();
      return;
    }
    for (const auto& target : targets) {
      auto d = transformer::st_trans(p, target, tests, cfg.transformer(), spectra.passed);
      TargetReport tr;
      if (d.kind == OutcomeKind::Derived) {
        auto f = opts.transform ? opts.transform(target, std::move(d.f)) : std::move(d.f);
        tr = analyze_target(p, target, f, cfg, opts.keep_artifacts);
      } else {
        tr.target = target;
        tr.outcome = d.kind;
        tr.reason = d.reason;
        if (d.kind == OutcomeKind::RetainStatement) {
          auto h = hints::retain_statement(1.0);
          h.line = target.line;
          h.component = target.component;
          h.arm = target.arm;
          tr.hints.push_back(std::move(h));
        }
      }
      tr.log = std::move(d.log);
      sr.targets.push_back(std::move(tr));
    }
  });

  std::vector<hints::Hint> all;
  for (const auto& sr : out.statements) {
    for (const auto& t : sr.targets) all.insert(all.end(), t.hints.begin(), t.hints.end());
  }
  out.hints = hints::rank_hints(std::move(all));
  return out;
}

}  // namespace minthint::driver
