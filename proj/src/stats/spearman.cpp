#include "minthint/stats/spearman.hpp"

#include <Eigen/Dense>

#include "minthint/error.hpp"

namespace minthint::stats {

namespace {

template <class T>
void check_lengths(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("columns have lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
  if (a.size() < 3) throw TooFewSamples("rank correlation needs at least 3 samples");
}

}  // namespace

double correlation(const RankedVector& a, const RankedVector& b) {
  if (a.constant || b.constant) return 0.0;
  return std::clamp(a.dot(b), -1.0, 1.0);
}

double partial_correlation(const RankedVector& a, const RankedVector& b, const std::vector<const RankedVector*>& C) {
  if (C.empty()) return correlation(a, b);
  if (a.constant || b.constant) return 0.0;
  std::vector<const RankedVector*> cols{&a, &b};
  cols.insert(cols.end(), C.begin(), C.end());
  const auto k = static_cast<Eigen::Index>(cols.size());
  Eigen::MatrixXd R(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    R(i, i) = 1.0;
    for (Eigen::Index j = 0; j < i; ++j) R(i, j) = R(j, i) = correlation(*cols[i], *cols[j]);
  }

  // Residual variance of a and of b given C; near zero means C determines it.
  Eigen::MatrixXd Rcc = R.bottomRightCorner(k - 2, k - 2);
  Rcc.diagonal().array() += kPartialRidge;
  Eigen::LDLT<Eigen::MatrixXd> cc(Rcc);
  for (Eigen::Index v = 0; v < 2; ++v) {
    Eigen::VectorXd r = R.block(2, v, k - 2, 1);
    if (1.0 - r.dot(cc.solve(r)) < kSingularResidual) throw SingularControl();
  }

  Eigen::MatrixXd Rr = R;
  Rr.diagonal().array() += kPartialRidge;
  Eigen::MatrixXd P = Rr.ldlt().solve(Eigen::MatrixXd::Identity(k, k));
  double denom = std::sqrt(P(0, 0) * P(1, 1));
  if (!(denom > 0.0)) throw SingularControl();
  return std::clamp(-P(0, 1) / denom, -1.0, 1.0);
}

template <class T>
double spearman(const std::vector<T>& a, const std::vector<T>& b) {
  check_lengths(a, b);
  return correlation(ranked(a), ranked(b));
}

template <class T>
double spearman_partial(const std::vector<T>& a, const std::vector<T>& b, const std::vector<std::vector<T>>& C) {
  check_lengths(a, b);
  std::vector<RankedVector> rc;
  rc.reserve(C.size());
  for (const auto& c : C) {
    check_lengths(a, c);
    rc.push_back(ranked(c));
  }
  if (a.size() <= C.size()) throw TooFewSamples("partial correlation needs more samples than controls");
  std::vector<const RankedVector*> ptrs;
  for (const auto& c : rc) ptrs.push_back(&c);
  return partial_correlation(ranked(a), ranked(b), ptrs);
}

template double spearman(const std::vector<std::int64_t>&, const std::vector<std::int64_t>&);
template double spearman(const std::vector<double>&, const std::vector<double>&);
template double spearman_partial(const std::vector<std::int64_t>&, const std::vector<std::int64_t>&,
                                 const std::vector<std::vector<std::int64_t>>&);
template double spearman_partial(const std::vector<double>&, const std::vector<double>&,
                                 const std::vector<std::vector<double>>&);

PartialCorrelator::PartialCorrelator(const RankedVector& target)
    : target_residual_(target.z), target_norm2_(target.constant ? 0.0 : 1.0), target_constant_(target.constant) {}

std::vector<double> PartialCorrelator::residual(const std::vector<double>& v) const {
  std::vector<double> r = v;
  // Modified Gram-Schmidt, applied twice for stability.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& q : basis_) {
      double proj = std::inner_product(r.begin(), r.end(), q.begin(), 0.0);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] -= proj * q[i];
    }
  }
  return r;
}

void PartialCorrelator::add_control(const RankedVector& c) {
  ++controls_;
  if (c.constant) return;
  auto r = residual(c.z);
  double n2 = std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
  if (n2 < kSingularResidual) return;
  double norm = std::sqrt(n2);
  for (auto& v : r) v /= norm;
  basis_.push_back(std::move(r));
  target_residual_ = residual(target_residual_);
  target_norm2_ = std::inner_product(target_residual_.begin(), target_residual_.end(), target_residual_.begin(), 0.0);
}

std::optional<double> PartialCorrelator::partial(const RankedVector& e) const {
  if (target_constant_ || e.constant) return 0.0;
  if (target_norm2_ < kSingularResidual) return std::nullopt;
  auto r = residual(e.z);
  double n2 = std::inner_product(r.begin(), r.end(), r.begin(), 0.0);
  if (n2 < kSingularResidual) return std::nullopt;
  double dot = std::inner_product(r.begin(), r.end(), target_residual_.begin(), 0.0);
  return std::clamp(dot / std::sqrt(n2 * target_norm2_), -1.0, 1.0);
}

}  // namespace minthint::stats
