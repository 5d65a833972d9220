#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "minthint/lang/expr_utils.hpp"
#include "minthint/lang/normalize.hpp"

namespace minthint::hints {

inline constexpr std::size_t kDefaultEditThreshold = 2;
inline constexpr std::size_t kNoOrdinal = std::numeric_limits<std::size_t>::max();

/// Declared in tie-break priority order, highest first.
enum class HintKind { Replace, Compound, Retain, RetainStatement, Insert, Remove };

const char* kind_name(HintKind k);

struct Hint {
  int line = 0;
  lang::Component component = lang::Component::AssignRHS;
  int arm = -1;
  HintKind kind = HintKind::Insert;
  lang::ExprPtr expr;  // inserted, retained or removed expression; the replacement for Replace
  lang::ExprPtr replaced;  // Replace only
  int position = -1;  // preorder index of the RHS occurrence acted on, -1 if none
  int occurrence = 0;  // 1-based among equal subtrees of the RHS when the subtree repeats, else 0
  double score = 0.0;
  double support = 0.0;  // likelihood of the expression being suggested
  std::size_t ordinal = kNoOrdinal;  // repair-space position of `expr`
  std::vector<Hint> constituents;  // Compound only

  /// The action without the statement location, e.g. "Replace a with b".
  std::string action() const;
  /// The action prefixed with the analyzed part of the statement when it is
  /// not the whole right-hand side, e.g. "[cond] Replace ...".
  std::string text() const;
};

nlohmann::json to_json(const Hint& h);

struct EditResult {
  lang::ExprPtr match;
  std::size_t dist = 0;
  int position = -1;  // preorder occurrence index in the RHS, when matching against occurrences
};

/// The member of S of the same type as e nearest to it; ties go to the
/// smaller expression, then to the earlier printed form. Returns a null match
/// when S has no member of that type.
EditResult min_edit(const lang::Expr& e, const std::vector<lang::ExprPtr>& S);

/// Nearest available occurrence of the RHS of the same type; ties as above,
/// then preorder. Returns a null match when nothing qualifies.
EditResult min_edit(const lang::Expr& e, const std::vector<lang::Occurrence>& occurrences,
                    const std::vector<bool>& available);

/// Builds the hint for `e` given its nearest RHS subexpression.
/// dist 0 retains (the statement, when the match is the whole RHS), dist up to
/// the threshold replaces, anything farther inserts.
Hint gen_hint(const lang::ExprPtr& e, const EditResult& m, double lik_e, double lik_match, bool match_is_rhs,
              std::size_t edit_threshold = kDefaultEditThreshold);

Hint remove_hint(const lang::ExprPtr& e, double lik_e, int position);

/// "Retain the statement" with the given score.
Hint retain_statement(double score);

/// Groups constituents into one hint scored by their maximum. A single
/// constituent is returned as is.
Hint make_compound(std::vector<Hint> constituents);

}  // namespace minthint::hints
