#include "minthint/driver/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "minthint/lang/parser.hpp"
#include "minthint/parallel.hpp"

namespace minthint::driver {

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<CorpusTask> load_manifest(const fs::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(slurp(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad manifest " + path.string() + ": " + e.what());
  }
  auto base = path.parent_path();
  std::vector<CorpusTask> tasks;
  try {
    for (const auto& t : j.at("tasks")) {
      CorpusTask task;
      task.id = t.at("id").get<std::string>();
      task.faulty = base / t.at("faulty").get<std::string>();
      task.tests = base / t.at("tests").get<std::string>();
      if (t.contains("repaired")) task.repaired = base / t["repaired"].get<std::string>();
      if (t.contains("fault_line")) task.fault_line = t["fault_line"].get<int>();
      for (const auto& g : t.value("golden", nlohmann::json::array())) {
        task.golden.push_back({g.at("line").get<int>(), g.at("text").get<std::string>()});
      }
      tasks.push_back(std::move(task));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad manifest " + path.string() + ": " + e.what());
  }
  return tasks;
}

std::size_t golden_rank(const std::vector<hints::Hint>& ranked, const std::vector<GoldenHint>& golden) {
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    auto text = ranked[i].text();
    for (const auto& g : golden) {
      if (g.line == ranked[i].line && g.text == text) return i + 1;
    }
  }
  return 0;
}

TaskReport run_task(const CorpusTask& task, const Config& cfg, bool keep_result) {
  TaskReport r;
  r.id = task.id;
  try {
    auto program = lang::parse_program(slurp(task.faulty));
    auto tests = exec::parse_tests(slurp(task.tests), program);
    auto result = run_pipeline(program, tests, cfg);
    r.total_hints = result.hints.size();
    r.rank = golden_rank(result.hints, task.golden);
    for (const auto& s : result.statements) {
      if (s.eliminated()) ++r.eliminated;
      if (s.discarded()) ++r.discarded;
      if (s.discarded() && s.timed_out()) ++r.timed_out;
      if (task.fault_line && s.line == *task.fault_line) r.fault_localized = true;
    }
    if (keep_result) r.result = std::move(result);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

CorpusReport run_corpus(const std::vector<CorpusTask>& tasks, const Config& cfg, bool keep_results) {
  cfg.validate();
  std::vector<const CorpusTask*> order;
  for (const auto& t : tasks) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const CorpusTask* a, const CorpusTask* b) { return a->id < b->id; });
  Config inner = cfg;
  inner.jobs = 1;
  CorpusReport report;
  report.tasks.resize(order.size());
  parallel_for(order.size(), cfg.jobs, [&](std::size_t i) { report.tasks[i] = run_task(*order[i], inner, keep_results); });
  return report;
}

}  // namespace minthint::driver
