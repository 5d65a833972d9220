#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "minthint/driver/report.hpp"
#include "minthint/lang/parser.hpp"
#include "minthint/lang/printer.hpp"
#include "minthint/stats/spearman.hpp"

namespace py = pybind11;
using namespace minthint;

namespace {

driver::Config make_config(std::size_t k, std::size_t m, double delta, double beta, double gamma,
                           std::size_t edit_threshold, std::uint64_t seed, double passing_fraction) {
  driver::Config cfg;
  cfg.k = k;
  cfg.m = m;
  cfg.delta = delta;
  cfg.beta = beta;
  cfg.gamma = gamma;
  cfg.edit_threshold = edit_threshold;
  cfg.seed = seed;
  cfg.passing_fraction = passing_fraction;
  return cfg;
}

// Hints as a JSON string; the Python side decodes it.
std::string analyze(const std::string& source, const std::string& tests, std::size_t k, std::size_t m, double delta,
                    double beta, double gamma, std::size_t edit_threshold, std::uint64_t seed,
                    double passing_fraction) {
  auto cfg = make_config(k, m, delta, beta, gamma, edit_threshold, seed, passing_fraction);
  auto program = lang::parse_program(source);
  auto suite = exec::parse_tests(tests, program);
  std::ostringstream out;
  driver::write_hint_json(out, driver::run_pipeline(program, suite, cfg).hints);
  return out.str();
}

std::string run(const std::string& source, const std::string& args_json) {
  auto program = lang::parse_program(source);
  nlohmann::json line{{"id", "run"}, {"args", nlohmann::json::parse(args_json)}, {"expect", nlohmann::json::array()}};
  auto suite = exec::parse_tests(line.dump(), program);
  return exec::execute(program, suite.front().args).output_json().dump();
}

std::vector<std::pair<int, double>> suspicious(const std::string& source, const std::string& tests, std::size_t k) {
  auto program = lang::parse_program(source);
  std::vector<std::pair<int, double>> out;
  for (const auto& s : localize::localize_faults(program, exec::parse_tests(tests, program), k)) {
    out.emplace_back(s.line, s.score);
  }
  return out;
}

double noise(const std::string& faulty, const std::string& repaired, const std::string& tests, int line) {
  auto f = lang::parse_program(faulty);
  auto r = lang::parse_program(repaired);
  return driver::estimate_noise(f, r, line, exec::parse_tests(tests, f)).percentage;
}

std::string pretty(const std::string& source) { return lang::pretty_print(lang::parse_program(source)); }

}  // namespace

PYBIND11_MODULE(_minthint, m) {
  m.doc() = "Repair hints for programs in a small imperative language";

  py::register_exception<Error>(m, "MintHintError");

  m.def("analyze", &analyze, py::arg("program"), py::arg("tests"), py::arg("k") = 5, py::arg("m") = 4,
        py::arg("delta") = 0.4, py::arg("beta") = 0.1, py::arg("gamma") = 0.6, py::arg("edit_threshold") = 2,
        py::arg("seed") = 0, py::arg("passing_fraction") = 1.0, py::call_guard<py::gil_scoped_release>());
  m.def("run", &run, py::arg("program"), py::arg("args_json"));
  m.def("localize", &suspicious, py::arg("program"), py::arg("tests"), py::arg("k") = 5);
  m.def("estimate_noise", &noise, py::arg("faulty"), py::arg("repaired"), py::arg("tests"), py::arg("line"),
        py::call_guard<py::gil_scoped_release>());
  m.def("pretty_print", &pretty, py::arg("program"));
  m.def("spearman", &stats::spearman<double>, py::arg("a"), py::arg("b"));
  m.def("spearman_partial", &stats::spearman_partial<double>, py::arg("a"), py::arg("b"), py::arg("controls"));
}
