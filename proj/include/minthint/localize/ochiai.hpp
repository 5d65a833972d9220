#pragma once

#include <vector>

#include "minthint/exec/spectra.hpp"

namespace minthint::localize {

struct Suspicious {
  int line = 0;
  double score = 0.0;
};

using SuspiciousList = std::vector<Suspicious>;

/// ef / sqrt((ef + nf) * (ef + ep)); 0 when the statement never runs in a failing test.
double ochiai(const exec::StatementSpectrum& s);

/// Top-k statements with ef > 0, by score descending and then line ascending.
/// Throws NoFailingTests when the suite has no failing test.
SuspiciousList rank_statements(const exec::Spectra& spectra, std::size_t k);

SuspiciousList localize_faults(const lang::Program& p, const exec::TestSuite& tests, std::size_t k,
                               unsigned jobs = 1);

}  // namespace minthint::localize
