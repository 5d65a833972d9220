#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "minthint/exec/value.hpp"
#include "minthint/lang/ast.hpp"

namespace minthint::exec {

struct TestCase {
  std::string id;
  std::vector<Value> args;  // one per entry-function parameter
  std::vector<Value> expect;  // printed values, then the return value if any
};

using TestSuite = std::vector<TestCase>;

/// Parses a JSON-lines suite: {"id": ..., "args": [...], "expect": [...]} per line.
/// Blank lines are skipped. Arguments are checked against the entry function.
TestSuite parse_tests(std::string_view text, const lang::Program& program);
TestSuite load_tests(const std::filesystem::path& path, const lang::Program& program);

nlohmann::json to_json(const TestCase& t);

}  // namespace minthint::exec
