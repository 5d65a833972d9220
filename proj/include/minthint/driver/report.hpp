#pragma once

#include <iosfwd>

#include "minthint/driver/corpus.hpp"
#include "minthint/driver/noise.hpp"

namespace minthint::driver {

/// Rank, line, hint and score, one row per hint.
void write_hint_table(std::ostream& out, const std::vector<hints::Hint>& ranked);
/// JSON array of hint objects.
void write_hint_json(std::ostream& out, const std::vector<hints::Hint>& ranked);

void write_corpus_table(std::ostream& out, const CorpusReport& report);
/// One JSON object per task.
void write_corpus_jsonl(std::ostream& out, const CorpusReport& report);

void write_noise(std::ostream& out, const NoiseReport& r, Format format);

/// Debug dumps of a pipeline run's artifacts, per analyzed target. The
/// likelihood dump lists expressions by likelihood, most likely first.
void dump_transformers(std::ostream& out, const PipelineResult& r);
void dump_datasets(std::ostream& out, const PipelineResult& r);
void dump_likelihoods(std::ostream& out, const PipelineResult& r);

}  // namespace minthint::driver
