#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "minthint/driver/pipeline.hpp"

namespace minthint::driver {

/// A hint text, at a line, that counts as the known repair.
struct GoldenHint {
  int line = 0;
  std::string text;
};

struct CorpusTask {
  std::string id;
  std::filesystem::path faulty;
  std::optional<std::filesystem::path> repaired;
  std::filesystem::path tests;
  std::optional<int> fault_line;
  std::vector<GoldenHint> golden;
};

/// Reads {"tasks": [{"id", "faulty", "tests", "repaired"?, "fault_line"?,
/// "golden"?: [{"line", "text"}]}]}. Paths are relative to the manifest.
std::vector<CorpusTask> load_manifest(const std::filesystem::path& path);

struct TaskReport {
  std::string id;
  std::string error;  // empty on success
  std::size_t rank = 0;  // 1-based rank of the first golden hint, 0 when absent
  std::size_t total_hints = 0;
  std::size_t eliminated = 0;  // statements left with only "Retain the statement"
  std::size_t discarded = 0;  // statements whose every transformer was discarded
  std::size_t timed_out = 0;  // of those, statements where a search timed out
  bool fault_localized = false;  // fault line among the top-k, when known
  std::optional<PipelineResult> result;

  bool ok() const { return error.empty(); }
};

struct CorpusReport {
  std::vector<TaskReport> tasks;  // ordered by task id
};

/// Position of the first hint that matches a golden entry; 0 when none does.
std::size_t golden_rank(const std::vector<hints::Hint>& ranked, const std::vector<GoldenHint>& golden);

TaskReport run_task(const CorpusTask& task, const Config& cfg, bool keep_result = false);

/// Runs tasks concurrently up to cfg.jobs. A failing task is reported and the run continues.
CorpusReport run_corpus(const std::vector<CorpusTask>& tasks, const Config& cfg, bool keep_results = false);

}  // namespace minthint::driver
