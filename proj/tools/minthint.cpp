#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "minthint/driver/report.hpp"
#include "minthint/lang/parser.hpp"

namespace {

using namespace minthint;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Parses "LO:HI" into the angelic window.
void set_window(driver::Config& cfg, const std::string& window) {
  auto colon = window.find(':');
  if (colon == std::string::npos) throw driver::ConfigError("angelic window must look like LO:HI");
  try {
    cfg.angelic.window_lo = std::stoll(window.substr(0, colon));
    cfg.angelic.window_hi = std::stoll(window.substr(colon + 1));
  } catch (const std::logic_error&) {
    throw driver::ConfigError("angelic window must look like LO:HI");
  }
}

struct Options {
  driver::Config cfg;
  std::string format = "table";
  std::string window;
  std::string program, tests, manifest, faulty, repaired;
  int line = 0;
  bool dump_transformer = false, dump_dataset = false, dump_likelihoods = false;
};

void add_common(CLI::App* cmd, Options& o) {
  auto& c = o.cfg;
  cmd->add_option("--k", c.k, "statements taken from fault localization")->capture_default_str();
  cmd->add_option("--m", c.m, "expression size bound")->capture_default_str();
  cmd->add_option("--delta", c.delta, "likelihood threshold for simple hints")->capture_default_str();
  cmd->add_option("--beta", c.beta, "partial likelihood threshold for admission")->capture_default_str();
  cmd->add_option("--gamma", c.gamma, "partial likelihood threshold for compound hints")->capture_default_str();
  cmd->add_option("--edit-threshold", c.edit_threshold, "edit distance up to which a replace is suggested")
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "seed for tie breaking")->capture_default_str();
  cmd->add_option("--passing-fraction", c.passing_fraction, "fraction of passing tests used")->capture_default_str();
  cmd->add_option("--angelic-window", o.window, "integer search window LO:HI");
  cmd->add_option("--angelic-budget-ms", c.angelic.time_budget_ms, "search time per failing test")
      ->capture_default_str();
  cmd->add_option("--max-hits", c.angelic.max_hits, "executions of the statement searched per test")
      ->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "worker threads")->capture_default_str();
  cmd->add_option("--format", o.format, "table or json")->capture_default_str();
  cmd->add_option("--localizer", "fault localizer")->check(CLI::IsMember({"ochiai"}))->default_str("ochiai");
}

void finish_config(Options& o) {
  o.cfg.format = driver::parse_format(o.format);
  if (!o.window.empty()) set_window(o.cfg, o.window);
  o.cfg.validate();
}

int analyze(Options& o) {
  auto program = lang::parse_program(slurp(o.program));
  auto tests = exec::parse_tests(slurp(o.tests), program);
  driver::PipelineOptions popts;
  popts.keep_artifacts = o.dump_dataset || o.dump_likelihoods;
  auto result = driver::run_pipeline(program, tests, o.cfg, popts);
  if (o.dump_transformer) driver::dump_transformers(std::cerr, result);
  if (o.dump_dataset) driver::dump_datasets(std::cerr, result);
  if (o.dump_likelihoods) driver::dump_likelihoods(std::cerr, result);
  if (o.cfg.format == driver::Format::Json) {
    driver::write_hint_json(std::cout, result.hints);
  } else {
    driver::write_hint_table(std::cout, result.hints);
  }
  return 0;
}

int corpus(Options& o) {
  auto report = driver::run_corpus(driver::load_manifest(o.manifest), o.cfg);
  if (o.cfg.format == driver::Format::Json) {
    driver::write_corpus_jsonl(std::cout, report);
  } else {
    driver::write_corpus_table(std::cout, report);
  }
  return 0;
}

int noise(Options& o) {
  auto faulty = lang::parse_program(slurp(o.faulty));
  auto repaired = lang::parse_program(slurp(o.repaired));
  auto tests = exec::parse_tests(slurp(o.tests), faulty);
  driver::write_noise(std::cout, driver::estimate_noise(faulty, repaired, o.line, tests, o.cfg), o.cfg.format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Repair hints for a faulty program from its test suite"};
  app.require_subcommand(1);
  Options o;

  auto* a = app.add_subcommand("analyze", "rank repair hints for a faulty program");
  add_common(a, o);
  a->add_option("--program", o.program, "program source")->required()->check(CLI::ExistingFile);
  a->add_option("--tests", o.tests, "test suite (JSON lines)")->required()->check(CLI::ExistingFile);
  a->add_flag("--dump-transformer", o.dump_transformer, "write state transformers to stderr");
  a->add_flag("--dump-dataset", o.dump_dataset, "write datasets as CSV to stderr");
  a->add_flag("--dump-likelihoods", o.dump_likelihoods, "write ranked likelihoods to stderr");

  auto* c = app.add_subcommand("corpus", "run every task of a corpus manifest");
  add_common(c, o);
  c->add_option("--manifest", o.manifest, "corpus manifest (JSON)")->required()->check(CLI::ExistingFile);

  auto* n = app.add_subcommand("noise", "percentage of derived pairs the repaired program never produces");
  add_common(n, o);
  n->add_option("--faulty", o.faulty, "faulty program")->required()->check(CLI::ExistingFile);
  n->add_option("--repaired", o.repaired, "repaired program")->required()->check(CLI::ExistingFile);
  n->add_option("--tests", o.tests, "test suite (JSON lines)")->required()->check(CLI::ExistingFile);
  n->add_option("--line", o.line, "statement line")->required();

  try {
    app.parse(argc, argv);
    finish_config(o);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const driver::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*a) return analyze(o);
    if (*c) return corpus(o);
    return noise(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
