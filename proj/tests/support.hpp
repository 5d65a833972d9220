#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "minthint/exec/testcase.hpp"
#include "minthint/lang/parser.hpp"

namespace testing_support {

inline std::filesystem::path corpus(const std::string& rel) { return std::filesystem::path(MINTHINT_CORPUS_DIR) / rel; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Fixture {
  minthint::lang::Program program;
  minthint::exec::TestSuite tests;
};

inline Fixture load(const std::string& task, const std::string& file = "faulty.mh",
                    const std::string& tests = "tests.jsonl") {
  auto p = minthint::lang::parse_program(slurp(corpus(task + "/" + file)));
  auto t = minthint::exec::parse_tests(slurp(corpus(task + "/" + tests)), p);
  return {std::move(p), std::move(t)};
}

}  // namespace testing_support
