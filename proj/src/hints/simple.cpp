#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>

#include "minthint/hints/synthesis.hpp"

namespace minthint::hints {

HintContext::HintContext(const lang::NormalizedTarget& target, const repair::RepairSpace& space,
                         const repair::Dataset& data, const stats::LikelihoodTable& table)
    : target_(target), space_(space), data_(data), table_(table), occurrences_(lang::occurrences(space.rhs)) {
  std::unordered_map<lang::ExprPtr, std::size_t, lang::ExprHash, lang::ExprEqual> s_index;
  for (std::size_t c = 0; c < space.candidates.size() && space.candidates[c].in_s; ++c) {
    s_index.emplace(space.candidates[c].expr, c);
  }
  std::unordered_map<std::size_t, int> seen, total;
  for (const auto& o : occurrences_) {
    auto c = s_index.at(o.expr);
    occ_candidate_.push_back(c);
    ++total[c];
  }
  for (auto c : occ_candidate_) occ_number_.push_back(total[c] > 1 ? ++seen[c] : 0);
}

double HintContext::likelihood_of(std::size_t candidate) const {
  int col = data_.column_of[candidate];
  return col < 0 ? 0.0 : table_.likelihood(static_cast<std::size_t>(col));
}

const lang::ExprPtr& HintContext::expr_of_column(std::size_t col) const {
  return space_.candidates[data_.candidate[col]].expr;
}

std::vector<std::size_t> HintContext::ranked_columns(std::uint64_t seed) const {
  const auto& lik = table_.likelihoods();
  std::vector<std::size_t> order(lik.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lik[a] > lik[b]; });
  std::seed_seq seq{seed, static_cast<std::uint64_t>(target_.line), static_cast<std::uint64_t>(target_.component),
                    static_cast<std::uint64_t>(target_.arm + 1)};
  std::mt19937_64 rng(seq);
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i + 1;
    while (j < order.size() && lik[order[i]] - lik[order[j]] <= kTieTolerance) ++j;
    if (j - i > 1) std::shuffle(order.begin() + static_cast<std::ptrdiff_t>(i), order.begin() + static_cast<std::ptrdiff_t>(j), rng);
    i = j;
  }
  return order;
}

bool HintContext::rhs_is_most_likely(double delta) const {
  const auto& lik = table_.likelihoods();
  if (lik.empty()) return false;
  double top = *std::max_element(lik.begin(), lik.end());
  double rhs = likelihood_of(occ_candidate_.front());
  return data_.has(occ_candidate_.front()) && rhs > delta && top - rhs <= kTieTolerance;
}

void HintContext::stamp(Hint& h) const {
  h.line = target_.line;
  h.component = target_.component;
  h.arm = target_.arm;
  if (h.position >= 0 && h.kind != HintKind::Insert) h.occurrence = occ_number_[static_cast<std::size_t>(h.position)];
  for (auto& c : h.constituents) stamp(c);
}

namespace {

// Hint for an expression in column `col`, matched against the available RHS occurrences.
Hint hint_for(const HintContext& ctx, std::size_t col, const std::vector<bool>& available,
              const SynthesisConfig& cfg) {
  const auto& e = ctx.expr_of_column(col);
  auto m = min_edit(*e, ctx.occurrences(), available);
  double lik_match = m.match ? ctx.likelihood_of(ctx.candidate_of(static_cast<std::size_t>(m.position))) : 0.0;
  Hint h = gen_hint(e, m, ctx.table().likelihood(col), lik_match, m.position == 0, cfg.edit_threshold);
  h.ordinal = ctx.space().candidates[ctx.data().candidate[col]].ordinal;
  return h;
}

bool covers(const Hint& h) {
  return h.kind == HintKind::Retain || h.kind == HintKind::RetainStatement || h.kind == HintKind::Replace;
}

}  // namespace

std::vector<Hint> mint_simple_hints(const HintContext& ctx, const SynthesisConfig& cfg, std::vector<Admission>* trace) {
  std::vector<Hint> out;
  if (ctx.rhs_is_most_likely(cfg.delta)) {
    out.push_back(retain_statement(ctx.likelihood_of(ctx.candidate_of(0))));
    ctx.stamp(out.back());
    return out;
  }

  const auto& occ = ctx.occurrences();
  const std::vector<bool> all(occ.size(), true);
  stats::PartialCorrelator pc(ctx.table().x());
  std::vector<Hint> admitted;
  for (auto col : ctx.ranked_columns(cfg.seed)) {
    double lik = ctx.table().likelihood(col);
    if (lik <= cfg.delta) break;
    double p = lik;
    if (pc.controls() > 0) p = std::abs(pc.partial(ctx.table().column(col)).value_or(0.0));
    if (p < cfg.beta) continue;
    pc.add_control(ctx.table().column(col));
    if (trace) trace->push_back(Admission{col, lik, p});
    admitted.push_back(hint_for(ctx, col, all, cfg));
  }

  // An occurrence is covered when a retain or replace acts on it or on an enclosing subtree.
  std::vector<bool> covered(occ.size(), false);
  for (const auto& h : admitted) {
    if (!covers(h)) continue;
    const auto& at = occ[static_cast<std::size_t>(h.position)];
    for (std::size_t i = 0; i < occ.size(); ++i) covered[i] = covered[i] || at.contains(occ[i]);
  }

  std::vector<Hint> retains;
  for (auto& h : admitted) {
    if (h.kind == HintKind::Retain) {
      retains.push_back(std::move(h));
    } else {
      out.push_back(std::move(h));
    }
  }
  if (!retains.empty()) out.push_back(make_compound(std::move(retains)));

  // One remove per RHS subexpression none of whose occurrences is covered.
  for (std::size_t c = 0; c < ctx.space().candidates.size() && ctx.space().candidates[c].in_s; ++c) {
    int first = -1;
    bool any_covered = false;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      if (ctx.candidate_of(i) != c) continue;
      if (first < 0) first = static_cast<int>(i);
      any_covered = any_covered || covered[i];
    }
    if (first < 0 || any_covered) continue;
    Hint h = remove_hint(ctx.space().candidates[c].expr, ctx.likelihood_of(c), first);
    h.ordinal = ctx.space().candidates[c].ordinal;
    out.push_back(std::move(h));
  }
  for (auto& h : out) {
    ctx.stamp(h);
    // A structural remove applies to every occurrence of the subtree.
    if (h.kind == HintKind::Remove) h.occurrence = 0;
  }
  return out;
}

}  // namespace minthint::hints
