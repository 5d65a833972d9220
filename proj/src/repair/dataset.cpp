#include "minthint/repair/dataset.hpp"

#include <algorithm>
#include <ostream>

#include "minthint/error.hpp"
#include "minthint/exec/eval.hpp"
#include "minthint/lang/printer.hpp"

namespace minthint::repair {

InputFrames::InputFrames(const transformer::StateTransformer& f) {
  int max_slot = -1;
  for (const auto& pair : f.pairs) {
    for (const auto& b : pair.states.before.vars) max_slot = std::max(max_slot, b.slot);
  }
  for (const auto& pair : f.pairs) {
    auto& frame = frames_.emplace_back(static_cast<std::size_t>(max_slot + 1), nullptr);
    for (const auto& b : pair.states.before.vars) {
      if (b.slot >= 0) frame[static_cast<std::size_t>(b.slot)] = &b.value;
    }
  }
}

std::optional<std::vector<std::int64_t>> InputFrames::evaluate(const lang::Expr& e) const {
  std::vector<std::int64_t> col(frames_.size());
  for (std::size_t i = 0; i < frames_.size(); ++i) {
    const auto& frame = frames_[i];
    try {
      col[i] = exec::eval_expr(e, [&](int slot) -> const exec::Value& {
        if (slot < 0 || slot >= static_cast<int>(frame.size()) || !frame[static_cast<std::size_t>(slot)]) {
          throw PreconditionError("expression reads a variable outside the state");
        }
        return *frame[static_cast<std::size_t>(slot)];
      });
    } catch (const exec::RuntimeFault&) {
      return std::nullopt;
    }
  }
  return col;
}

Dataset build_dataset(const transformer::StateTransformer& f, const RepairSpace& r,
                      const lang::NormalizedTarget& target) {
  if (f.empty()) throw EmptyTransformer();
  Dataset d;
  d.rows = f.size();
  for (const auto& pair : f.pairs) {
    const auto* x = pair.states.after.find(target.lhs);
    if (!x) throw PreconditionError("transformer pair lacks the LHS '" + target.lhs + "'");
    d.x.push_back(x->value.scalar);
  }
  InputFrames frames(f);
  d.column_of.assign(r.candidates.size(), -1);
  for (std::size_t c = 0; c < r.candidates.size(); ++c) {
    auto col = frames.evaluate(*r.candidates[c].expr);
    if (!col) continue;
    d.column_of[c] = static_cast<int>(d.columns.size());
    d.columns.push_back(std::move(*col));
    d.candidate.push_back(c);
  }
  return d;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const Dataset& d, const RepairSpace& r, const lang::NormalizedTarget& target) {
  out << csv_field(target.lhs);
  for (auto c : d.candidate) out << ',' << csv_field(lang::to_string(*r.candidates[c].expr));
  out << '\n';
  for (std::size_t i = 0; i < d.rows; ++i) {
    out << d.x[i];
    for (const auto& col : d.columns) out << ',' << col[i];
    out << '\n';
  }
}

}  // namespace minthint::repair
