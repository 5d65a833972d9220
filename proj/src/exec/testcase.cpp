#include "minthint/exec/testcase.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "minthint/error.hpp"

namespace minthint::exec {

using nlohmann::json;

TestSuite parse_tests(std::string_view text, const lang::Program& program) {
  const auto& fn = program.entry();
  TestSuite suite;
  std::set<std::string> ids;
  std::istringstream in{std::string(text)};
  std::string row;
  int lineno = 0;
  while (std::getline(in, row)) {
    ++lineno;
    if (row.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string where = "tests line " + std::to_string(lineno);
    json j;
    try {
      j = json::parse(row);
    } catch (const json::parse_error& e) {
      throw TestSuiteError(where + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("args") || !j.contains("expect")) {
      throw TestSuiteError(where + ": expected an object with \"args\" and \"expect\"");
    }
    TestCase t;
    if (j.contains("id")) {
      t.id = j["id"].is_string() ? j["id"].get<std::string>() : j["id"].dump();
    } else {
      t.id = "t" + std::to_string(suite.size() + 1);
    }
    if (!ids.insert(t.id).second) throw TestSuiteError(where + ": duplicate test id '" + t.id + "'");
    const auto& args = j["args"];
    if (!args.is_array() || args.size() != fn.params.size()) {
      throw TestSuiteError(where + ": '" + fn.name + "' takes " + std::to_string(fn.params.size()) +
                           " arguments");
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      const auto& var = fn.variables[fn.params[i]];
      t.args.push_back(value_from_json(args[i], var.type, where + " argument '" + var.name + "'"));
    }
    if (!j["expect"].is_array()) throw TestSuiteError(where + ": \"expect\" must be an array");
    for (const auto& e : j["expect"]) t.expect.push_back(output_from_json(e, where));
    suite.push_back(std::move(t));
  }
  return suite;
}

TestSuite load_tests(const std::filesystem::path& path, const lang::Program& program) {
  std::ifstream in(path);
  if (!in) throw TestSuiteError("cannot open test suite " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_tests(buf.str(), program);
}

json to_json(const TestCase& t) {
  json args = json::array();
  for (const auto& a : t.args) args.push_back(to_json(a));
  json expect = json::array();
  for (const auto& e : t.expect) expect.push_back(to_json(e));
  return json{{"id", t.id}, {"args", args}, {"expect", expect}};
}

}  // namespace minthint::exec
