#pragma once

#include <cstdint>
#include <vector>

#include "minthint/repair/dataset.hpp"
#include "minthint/stats/spearman.hpp"

namespace minthint::stats {

/// |spearman(e, x)|.
double likelihood(const std::vector<std::int64_t>& e, const std::vector<std::int64_t>& x);

/// |spearman_partial(e, x | L)|; a singular controlling set gives 0.
double p_likelihood(const std::vector<std::int64_t>& e, const std::vector<std::vector<std::int64_t>>& L,
                    const std::vector<std::int64_t>& x);

/// Ranked columns and likelihoods for every dataset column, computed once.
class LikelihoodTable {
 public:
  explicit LikelihoodTable(const repair::Dataset& d, unsigned jobs = 1);

  std::size_t size() const { return columns_.size(); }
  const RankedVector& x() const { return x_; }
  const RankedVector& column(std::size_t col) const { return columns_[col]; }
  double likelihood(std::size_t col) const { return likelihood_[col]; }
  const std::vector<double>& likelihoods() const { return likelihood_; }

  /// Partial likelihood by the precision-matrix route.
  double p_likelihood(std::size_t col, const std::vector<std::size_t>& controls) const;

 private:
  RankedVector x_;
  std::vector<RankedVector> columns_;
  std::vector<double> likelihood_;
};

}  // namespace minthint::stats
