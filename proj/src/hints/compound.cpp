#include <algorithm>
#include <array>
#include <cmath>
#include <tuple>

#include "minthint/hints/synthesis.hpp"

namespace minthint::hints {

namespace {

class SetBuilder {
 public:
  SetBuilder(const HintContext& ctx, const SynthesisConfig& cfg)
      : ctx_(ctx), cfg_(cfg), available_(ctx.occurrences().size(), true),
        removed_(ctx.table().size(), false), pc_(ctx.table().x()) {}

  Hint build(std::size_t seed) {
    admit(seed);
    while (constituents_.size() < cfg_.max_compound) {
      std::size_t best = 0;
      double best_p = -1.0;
      for (std::size_t col = 0; col < removed_.size(); ++col) {
        if (removed_[col]) continue;
        double p = std::abs(pc_.partial(ctx_.table().column(col)).value_or(0.0));
        if (p > best_p + kTieTolerance) {
          best_p = p;
          best = col;
        }
      }
      if (best_p <= cfg_.gamma) break;
      admit(best);
    }
    complete_with_removes();
    Hint h = make_compound(std::move(constituents_));
    ctx_.stamp(h);
    return h;
  }

 private:
  void admit(std::size_t col) {
    const auto& occ = ctx_.occurrences();
    const auto& e = ctx_.expr_of_column(col);
    auto m = min_edit(*e, occ, available_);
    double lik_match = m.match ? ctx_.likelihood_of(ctx_.candidate_of(static_cast<std::size_t>(m.position))) : 0.0;
    Hint h = gen_hint(e, m, ctx_.table().likelihood(col), lik_match, m.position == 0, cfg_.edit_threshold);
    h.ordinal = ctx_.space().candidates[ctx_.data().candidate[col]].ordinal;
    removed_[col] = true;
    pc_.add_control(ctx_.table().column(col));
    if (h.kind != HintKind::Insert) {
      // The acted-on subtree and everything overlapping it leave the repair space.
      const auto& at = occ[static_cast<std::size_t>(h.position)];
      covered_.push_back(static_cast<std::size_t>(h.position));
      for (std::size_t i = 0; i < occ.size(); ++i) {
        if (!at.overlaps(occ[i])) continue;
        available_[i] = false;
        int c = ctx_.data().column_of[ctx_.candidate_of(i)];
        if (c >= 0) removed_[static_cast<std::size_t>(c)] = true;
      }
    }
    constituents_.push_back(std::move(h));
  }

  // Maximal RHS subtrees that share no node with a retained or replaced one.
  void complete_with_removes() {
    const auto& occ = ctx_.occurrences();
    std::vector<std::size_t> removed_at;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      bool clash = std::any_of(covered_.begin(), covered_.end(), [&](std::size_t k) { return occ[k].overlaps(occ[i]); });
      if (clash) continue;
      bool inside = std::any_of(removed_at.begin(), removed_at.end(), [&](std::size_t k) { return occ[k].contains(occ[i]); });
      if (inside) continue;
      removed_at.push_back(i);
      Hint h = remove_hint(occ[i].expr, ctx_.likelihood_of(ctx_.candidate_of(i)), static_cast<int>(i));
      h.ordinal = ctx_.space().candidates[ctx_.candidate_of(i)].ordinal;
      constituents_.push_back(std::move(h));
    }
  }

  const HintContext& ctx_;
  const SynthesisConfig& cfg_;
  std::vector<bool> available_;
  std::vector<bool> removed_;
  std::vector<std::size_t> covered_;
  stats::PartialCorrelator pc_;
  std::vector<Hint> constituents_;
};

}  // namespace

std::vector<Hint> mint_compound_hints(const HintContext& ctx, const SynthesisConfig& cfg) {
  std::vector<Hint> out;
  if (ctx.rhs_is_most_likely(cfg.delta)) return out;
  const auto& lik = ctx.table().likelihoods();
  if (lik.empty()) return out;
  double top = *std::max_element(lik.begin(), lik.end());
  if (top <= cfg.gamma) return out;

  // Seed per partition: the closest, then smallest, then earliest tied expression.
  using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::array<std::optional<std::pair<Key, std::size_t>>, 3> seeds;
  const std::vector<bool> all(ctx.occurrences().size(), true);
  for (std::size_t col = 0; col < lik.size(); ++col) {
    if (top - lik[col] > kTieTolerance) continue;
    const auto& e = ctx.expr_of_column(col);
    auto m = min_edit(*e, ctx.occurrences(), all);
    std::size_t dist = m.match ? m.dist : SIZE_MAX;
    std::size_t part = dist == 0 ? 0 : dist <= cfg.edit_threshold ? 1 : 2;
    Key key{dist, lang::expr_size(*e), ctx.space().candidates[ctx.data().candidate[col]].ordinal};
    if (!seeds[part] || key < seeds[part]->first) seeds[part] = std::make_pair(key, col);
  }
  for (const auto& s : seeds) {
    if (s) out.push_back(SetBuilder(ctx, cfg).build(s->second));
  }
  return out;
}

}  // namespace minthint::hints
