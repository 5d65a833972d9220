#include "minthint/stats/likelihood.hpp"

#include <cmath>

#include "minthint/error.hpp"
#include "minthint/parallel.hpp"

namespace minthint::stats {

double likelihood(const std::vector<std::int64_t>& e, const std::vector<std::int64_t>& x) {
  return std::abs(spearman(e, x));
}

double p_likelihood(const std::vector<std::int64_t>& e, const std::vector<std::vector<std::int64_t>>& L,
                    const std::vector<std::int64_t>& x) {
  try {
    return std::abs(spearman_partial(e, x, L));
  } catch (const SingularControl&) {
    return 0.0;
  }
}

LikelihoodTable::LikelihoodTable(const repair::Dataset& d, unsigned jobs) {
  if (d.rows < 3) throw TooFewSamples("rank correlation needs at least 3 transformer pairs");
  x_ = ranked(d.x);
  columns_.resize(d.columns.size());
  likelihood_.resize(d.columns.size());
  parallel_for(d.columns.size(), jobs, [&](std::size_t c) {
    columns_[c] = ranked(d.columns[c]);
    likelihood_[c] = std::abs(correlation(columns_[c], x_));
  });
}

double LikelihoodTable::p_likelihood(std::size_t col, const std::vector<std::size_t>& controls) const {
  if (controls.empty()) return likelihood_[col];
  std::vector<const RankedVector*> C;
  for (auto c : controls) C.push_back(&columns_[c]);
  try {
    return std::abs(partial_correlation(columns_[col], x_, C));
  } catch (const SingularControl&) {
    return 0.0;
  }
}

}  // namespace minthint::stats
