#include "minthint/exec/value.hpp"

#include "minthint/error.hpp"
#include "minthint/lang/printer.hpp"

namespace minthint::exec {

using nlohmann::json;

json scalar_to_json(Scalar type, std::int64_t v) {
  switch (type) {
    case Scalar::Bool: return json(v != 0);
    case Scalar::Char: return json(std::string(1, static_cast<char>(v)));
    default: return json(v);
  }
}

json to_json(const Value& v) {
  if (!v.is_array) return scalar_to_json(v.type, v.scalar);
  if (v.type == Scalar::Char) {
    // Trailing NULs are padding; embedded ones are data.
    std::size_t n = v.elems.size();
    while (n > 0 && v.elems[n - 1] == 0) --n;
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<char>(v.elems[i]);
    return json(s);
  }
  json arr = json::array();
  for (auto e : v.elems) arr.push_back(scalar_to_json(v.type, e));
  return arr;
}

std::string to_display(const Value& v) {
  if (!v.is_array) {
    switch (v.type) {
      case Scalar::Bool: return v.scalar ? "true" : "false";
      case Scalar::Char: return lang::char_literal(v.scalar);
      default: return std::to_string(v.scalar);
    }
  }
  std::string out = "{";
  for (std::size_t i = 0; i < v.elems.size(); ++i) {
    if (i) out += ", ";
    out += to_display(Value::of(v.type, v.elems[i]));
  }
  return out + "}";
}

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw TestSuiteError(where + ": " + what);
}

std::int64_t read_scalar(const json& j, Scalar type, const std::string& where) {
  switch (type) {
    case Scalar::Bool:
      if (!j.is_boolean()) bad(where, "expected a bool");
      return j.get<bool>() ? 1 : 0;
    case Scalar::Int:
      if (!j.is_number_integer()) bad(where, "expected an integer");
      return j.get<std::int64_t>();
    case Scalar::Char: {
      std::int64_t c = 0;
      if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s.size() != 1) bad(where, "expected a one-character string");
        c = static_cast<unsigned char>(s[0]);
      } else if (j.is_number_integer()) {
        c = j.get<std::int64_t>();
      } else {
        bad(where, "expected a character");
      }
      if (c < 0 || c > 127) bad(where, "character outside ASCII");
      return c;
    }
    case Scalar::Void: break;
  }
  bad(where, "void value");
}

}  // namespace

Value value_from_json(const json& j, const lang::Type& type, const std::string& where) {
  if (!type.is_array) return Value::of(type.scalar, read_scalar(j, type.scalar, where));
  std::vector<std::int64_t> elems;
  if (type.scalar == Scalar::Char && j.is_string()) {
    for (char c : j.get<std::string>()) {
      auto code = static_cast<unsigned char>(c);
      if (code > 127) bad(where, "character outside ASCII");
      elems.push_back(code);
    }
    elems.push_back(0);
  } else if (j.is_array()) {
    for (const auto& e : j) elems.push_back(read_scalar(e, type.scalar, where));
  } else {
    bad(where, "expected an array");
  }
  if (type.length) {
    if (elems.size() > *type.length) bad(where, "array longer than its declared length");
    elems.resize(*type.length, 0);
  }
  return Value::array(type.scalar, std::move(elems));
}

Value output_from_json(const json& j, const std::string& where) {
  if (j.is_boolean()) return Value::of(Scalar::Bool, j.get<bool>());
  if (j.is_number_integer()) return Value::of(Scalar::Int, j.get<std::int64_t>());
  if (j.is_string()) return Value::of(Scalar::Char, read_scalar(j, Scalar::Char, where));
  bad(where, "expected outputs must be bools, integers or one-character strings");
}

const Binding* ProgramState::find(const std::string& name) const {
  for (const auto& b : vars) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

const Value* ProgramState::find_slot(int slot) const {
  for (const auto& b : vars) {
    if (b.slot == slot) return &b.value;
  }
  return nullptr;
}

bool ProgramState::same_as(const ProgramState& o) const {
  if (vars.size() != o.vars.size()) return false;
  for (const auto& b : vars) {
    const auto* other = o.find(b.name);
    if (!other || !(other->value == b.value)) return false;
  }
  return true;
}

json to_json(const ProgramState& s) {
  json out = json::object();
  for (const auto& b : s.vars) out[b.name] = to_json(b.value);
  return out;
}

}  // namespace minthint::exec
