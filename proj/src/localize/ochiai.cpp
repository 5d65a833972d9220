#include "minthint/localize/ochiai.hpp"

#include <algorithm>
#include <cmath>

#include "minthint/error.hpp"

namespace minthint::localize {

double ochiai(const exec::StatementSpectrum& s) {
  if (s.ef == 0) return 0.0;
  double denom = std::sqrt(static_cast<double>(s.ef + s.nf) * static_cast<double>(s.ef + s.ep));
  return s.ef / denom;
}

SuspiciousList rank_statements(const exec::Spectra& spectra, std::size_t k) {
  if (spectra.failing() == 0) throw NoFailingTests();
  SuspiciousList out;
  for (const auto& s : spectra.statements) {
    if (s.ef > 0) out.push_back(Suspicious{s.line, ochiai(s)});
  }
  std::stable_sort(out.begin(), out.end(), [](const Suspicious& a, const Suspicious& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.line < b.line;
  });
  if (out.size() > k) out.resize(k);
  return out;
}

SuspiciousList localize_faults(const lang::Program& p, const exec::TestSuite& tests, std::size_t k, unsigned jobs) {
  return rank_statements(exec::collect_spectra(p, tests, exec::kDefaultStepLimit, jobs), k);
}

}  // namespace minthint::localize
