#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace minthint::stats {

/// 1-based ranks with ties given the average of the positions they span.
template <class T>
std::vector<double> average_ranks(std::span<const T> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && !(v[order[i]] < v[order[j + 1]])) ++j;
    double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

template <class T>
std::vector<double> average_ranks(const std::vector<T>& v) {
  return average_ranks(std::span<const T>(v));
}

/// Ranks centered and scaled to unit Euclidean norm, so the Pearson
/// correlation of two columns is their dot product. A constant column
/// has no variation and is reported through `constant`.
struct RankedVector {
  std::vector<double> z;
  bool constant = true;

  double dot(const RankedVector& o) const {
    return std::inner_product(z.begin(), z.end(), o.z.begin(), 0.0);
  }
};

inline RankedVector standardize(const std::vector<double>& ranks) {
  RankedVector out;
  out.z = ranks;
  if (ranks.empty()) return out;
  double mean = std::accumulate(ranks.begin(), ranks.end(), 0.0) / static_cast<double>(ranks.size());
  double ss = 0.0;
  for (auto& r : out.z) {
    r -= mean;
    ss += r * r;
  }
  // Ranks are multiples of 0.5, so any real variation gives ss >= 0.5.
  if (ss < 1e-12) {
    std::fill(out.z.begin(), out.z.end(), 0.0);
    return out;
  }
  double norm = std::sqrt(ss);
  for (auto& r : out.z) r /= norm;
  out.constant = false;
  return out;
}

template <class T>
RankedVector ranked(const std::vector<T>& v) {
  return standardize(average_ranks(v));
}

}  // namespace minthint::stats
