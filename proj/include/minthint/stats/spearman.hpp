#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minthint/stats/rank.hpp"

namespace minthint::stats {

inline constexpr double kPartialRidge = 1e-10;
inline constexpr double kSingularResidual = 1e-9;

/// Pearson correlation of tie-averaged ranks; 0 when either column is constant.
/// Throws LengthMismatch, or TooFewSamples when n < 3.
template <class T>
double spearman(const std::vector<T>& a, const std::vector<T>& b);

/// Partial rank correlation of a and b given the controlling columns C, from
/// the inverse of the rank-correlation matrix. Throws SingularControl when a
/// or b is (nearly) determined by C.
template <class T>
double spearman_partial(const std::vector<T>& a, const std::vector<T>& b, const std::vector<std::vector<T>>& C);

double correlation(const RankedVector& a, const RankedVector& b);
double partial_correlation(const RankedVector& a, const RankedVector& b, const std::vector<const RankedVector*>& C);

/// Partial correlations against one fixed column under a growing controlling
/// set. Controls are kept as an orthonormal basis, so each query costs
/// O(n * |C|). Agrees with partial_correlation up to the ridge term.
class PartialCorrelator {
 public:
  explicit PartialCorrelator(const RankedVector& target);

  /// Adds a control column. Columns already spanned by the set are ignored.
  void add_control(const RankedVector& c);
  std::size_t controls() const { return controls_; }

  /// partial(e, target | C), or nullopt when e or the target is determined by C.
  std::optional<double> partial(const RankedVector& e) const;

 private:
  std::vector<double> residual(const std::vector<double>& v) const;

  std::vector<std::vector<double>> basis_;
  std::vector<double> target_residual_;
  double target_norm2_ = 0.0;
  bool target_constant_ = false;
  std::size_t controls_ = 0;
};

}  // namespace minthint::stats
