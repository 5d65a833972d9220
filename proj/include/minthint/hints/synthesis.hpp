#pragma once

#include <cstdint>
#include <vector>

#include "minthint/hints/hint.hpp"
#include "minthint/repair/dataset.hpp"
#include "minthint/stats/likelihood.hpp"

namespace minthint::hints {

inline constexpr double kTieTolerance = 1e-9;

struct SynthesisConfig {
  double delta = 0.4;  // likelihood threshold for simple hints
  double beta = 0.1;  // partial-likelihood threshold for admitting into L
  double gamma = 0.6;  // partial-likelihood threshold for compound hints
  std::size_t edit_threshold = kDefaultEditThreshold;
  std::size_t max_compound = 10;  // constituents selected per compound set
  std::uint64_t seed = 0;
};

/// Everything hint synthesis needs for one target.
class HintContext {
 public:
  HintContext(const lang::NormalizedTarget& target, const repair::RepairSpace& space, const repair::Dataset& data,
              const stats::LikelihoodTable& table);

  const lang::NormalizedTarget& target() const { return target_; }
  const repair::RepairSpace& space() const { return space_; }
  const repair::Dataset& data() const { return data_; }
  const stats::LikelihoodTable& table() const { return table_; }
  const std::vector<lang::Occurrence>& occurrences() const { return occurrences_; }

  /// Likelihood of a repair-space candidate; 0 for candidates dropped from the dataset.
  double likelihood_of(std::size_t candidate) const;
  /// Candidate index of the S member matching an occurrence.
  std::size_t candidate_of(std::size_t occurrence) const { return occ_candidate_[occurrence]; }
  /// When an occurrence's subtree appears more than once in the RHS, its 1-based rank among them.
  int occurrence_number(std::size_t occurrence) const { return occ_number_[occurrence]; }
  const lang::ExprPtr& expr_of_column(std::size_t col) const;

  /// Columns by likelihood descending; members of a tie group appear in a
  /// seeded pseudo-random order.
  std::vector<std::size_t> ranked_columns(std::uint64_t seed) const;

  /// True when the whole RHS carries the top likelihood and exceeds `delta`:
  /// the statement then gets "Retain the statement" and nothing else.
  bool rhs_is_most_likely(double delta) const;

  /// Fills location fields and occurrence numbers of the hint and its constituents.
  void stamp(Hint& h) const;

 private:
  const lang::NormalizedTarget& target_;
  const repair::RepairSpace& space_;
  const repair::Dataset& data_;
  const stats::LikelihoodTable& table_;
  std::vector<lang::Occurrence> occurrences_;
  std::vector<std::size_t> occ_candidate_;
  std::vector<int> occ_number_;
};

/// One admission made by the simple pass, for inspection.
struct Admission {
  std::size_t column;
  double likelihood;
  double p_likelihood;
};

/// Iteratively takes the most likely expression until the likelihood drops to
/// delta, admitting it when its partial likelihood given those admitted so far
/// is at least beta, and turns admissions into hints. RHS subexpressions that
/// no retain or replace covers get remove hints.
std::vector<Hint> mint_simple_hints(const HintContext& ctx, const SynthesisConfig& cfg,
                                    std::vector<Admission>* trace = nullptr);

/// Builds up to three sets of expressions likely to appear together, seeded
/// from the tied top expressions split by edit distance to the RHS (0, within
/// the threshold, beyond it), and emits one hint per set.
std::vector<Hint> mint_compound_hints(const HintContext& ctx, const SynthesisConfig& cfg);

}  // namespace minthint::hints
