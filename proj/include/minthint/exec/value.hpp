#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "minthint/lang/ast.hpp"

namespace minthint::exec {

using lang::Scalar;

/// A runtime value. Arrays are held by value.
struct Value {
  Scalar type = Scalar::Int;
  bool is_array = false;
  std::int64_t scalar = 0;
  std::vector<std::int64_t> elems;

  static Value of(Scalar t, std::int64_t v) { return Value{t, false, v, {}}; }
  static Value array(Scalar t, std::vector<std::int64_t> e) { return Value{t, true, 0, std::move(e)}; }

  friend bool operator==(const Value&, const Value&) = default;
};

nlohmann::json scalar_to_json(Scalar type, std::int64_t v);
nlohmann::json to_json(const Value& v);
std::string to_display(const Value& v);

/// Reads a JSON value as the given declared type; throws TestSuiteError on mismatch.
Value value_from_json(const nlohmann::json& j, const lang::Type& type, const std::string& where);

/// Reads an expected output item; the type is inferred from the JSON kind.
Value output_from_json(const nlohmann::json& j, const std::string& where);

struct Binding {
  std::string name;
  int slot = -1;  // -1 for synthetic variables
  Value value;
};

/// Variables in scope at an instrumented statement, in scope order.
struct ProgramState {
  std::vector<Binding> vars;

  const Binding* find(const std::string& name) const;
  const Value* find_slot(int slot) const;
  /// Equality over (name, value) pairs; slots are ignored so states of two
  /// versions of a program compare by meaning.
  bool same_as(const ProgramState& o) const;
};

nlohmann::json to_json(const ProgramState& s);

}  // namespace minthint::exec
