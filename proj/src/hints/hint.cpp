#include "minthint/hints/hint.hpp"

#include <algorithm>
#include <tuple>

#include "minthint/hints/tree_edit.hpp"
#include "minthint/lang/printer.hpp"

namespace minthint::hints {

using lang::Component;

const char* kind_name(HintKind k) {
  switch (k) {
    case HintKind::Replace: return "replace";
    case HintKind::Compound: return "compound";
    case HintKind::Retain: return "retain";
    case HintKind::RetainStatement: return "retain-statement";
    case HintKind::Insert: return "insert";
    case HintKind::Remove: return "remove";
  }
  return "?";
}

namespace {

std::string with_occurrence(const lang::Expr& e, int occurrence) {
  std::string s = lang::to_string(e);
  if (occurrence > 0) s += " (occurrence " + std::to_string(occurrence) + ")";
  return s;
}

const char* part_prefix(Component c, int arm) {
  switch (c) {
    case Component::ForInit: return "[init] ";
    case Component::ForCond: return "[cond] ";
    case Component::ForUpd: return "[update] ";
    case Component::TernaryGuard: return "[guard] ";
    case Component::TernaryArm: return arm == 0 ? "[then] " : "[else] ";
    default: return "";
  }
}

}  // namespace

std::string Hint::action() const {
  switch (kind) {
    case HintKind::Replace:
      return "Replace " + with_occurrence(*replaced, occurrence) + " with " + lang::to_string(*expr);
    case HintKind::Insert: return "Insert " + lang::to_string(*expr);
    case HintKind::Remove: return "Remove " + with_occurrence(*expr, occurrence);
    case HintKind::Retain: return "Retain " + with_occurrence(*expr, occurrence);
    case HintKind::RetainStatement: return "Retain the statement";
    case HintKind::Compound: {
      std::string out;
      for (const auto& c : constituents) {
        if (!out.empty()) out += " and ";
        out += c.action();
      }
      return out;
    }
  }
  return "";
}

std::string Hint::text() const { return part_prefix(component, arm) + action(); }

nlohmann::json to_json(const Hint& h) {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : h.constituents) {
    cs.push_back(nlohmann::json{{"kind", kind_name(c.kind)}, {"text", c.action()}, {"score", c.score}});
  }
  return nlohmann::json{{"line", h.line},
                        {"kind", kind_name(h.kind)},
                        {"part", lang::component_name(h.component)},
                        {"text", h.text()},
                        {"score", h.score},
                        {"constituents", cs}};
}

namespace {

// Orders candidate matches: distance, then size, then printed form.
struct MatchKey {
  std::size_t dist;
  std::size_t size;
  std::string printed;
  int position;
  bool operator<(const MatchKey& o) const {
    return std::tie(dist, size, printed, position) < std::tie(o.dist, o.size, o.printed, o.position);
  }
};

}  // namespace

EditResult min_edit(const lang::Expr& e, const std::vector<lang::ExprPtr>& S) {
  EditResult best;
  MatchKey best_key{};
  auto te = to_tree(e);
  for (const auto& s : S) {
    if (s->type != e.type) continue;
    MatchKey key{tree_edit_distance(te, to_tree(*s)), lang::expr_size(*s), lang::to_string(*s), -1};
    if (!best.match || key < best_key) {
      best = EditResult{s, key.dist, -1};
      best_key = std::move(key);
    }
  }
  return best;
}

EditResult min_edit(const lang::Expr& e, const std::vector<lang::Occurrence>& occurrences,
                    const std::vector<bool>& available) {
  EditResult best;
  MatchKey best_key{};
  auto te = to_tree(e);
  for (std::size_t i = 0; i < occurrences.size(); ++i) {
    const auto& s = occurrences[i].expr;
    if (!available[i] || s->type != e.type) continue;
    MatchKey key{tree_edit_distance(te, to_tree(*s)), lang::expr_size(*s), lang::to_string(*s), static_cast<int>(i)};
    if (!best.match || key < best_key) {
      best = EditResult{s, key.dist, static_cast<int>(i)};
      best_key = std::move(key);
    }
  }
  return best;
}

Hint gen_hint(const lang::ExprPtr& e, const EditResult& m, double lik_e, double lik_match, bool match_is_rhs,
              std::size_t edit_threshold) {
  Hint h;
  h.expr = e;
  h.support = lik_e;
  if (m.match && m.dist == 0) {
    h.kind = match_is_rhs ? HintKind::RetainStatement : HintKind::Retain;
    h.position = m.position;
    h.score = lik_e;
  } else if (m.match && m.dist <= edit_threshold) {
    h.kind = HintKind::Replace;
    h.replaced = m.match;
    h.position = m.position;
    h.score = std::max(lik_e, 1.0 - lik_match);
  } else {
    h.kind = HintKind::Insert;
    h.score = lik_e;
  }
  return h;
}

Hint remove_hint(const lang::ExprPtr& e, double lik_e, int position) {
  Hint h;
  h.kind = HintKind::Remove;
  h.expr = e;
  h.position = position;
  h.score = 1.0 - lik_e;
  h.support = h.score;
  return h;
}

Hint retain_statement(double score) {
  Hint h;
  h.kind = HintKind::RetainStatement;
  h.score = score;
  h.support = score;
  return h;
}

Hint make_compound(std::vector<Hint> constituents) {
  if (constituents.size() == 1) return std::move(constituents.front());
  Hint h;
  h.kind = HintKind::Compound;
  for (const auto& c : constituents) {
    h.score = std::max(h.score, c.score);
    if (c.kind != HintKind::Remove) h.support = std::max(h.support, c.support);
    h.ordinal = std::min(h.ordinal, c.ordinal);
  }
  h.constituents = std::move(constituents);
  return h;
}

}  // namespace minthint::hints
