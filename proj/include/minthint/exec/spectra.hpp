#pragma once

#include <vector>

#include "minthint/exec/interpreter.hpp"

namespace minthint::exec {

struct StatementSpectrum {
  int line = 0;
  int ep = 0;  // passing tests executing the statement
  int ef = 0;  // failing tests executing the statement
  int np = 0;
  int nf = 0;
};

struct Spectra {
  std::vector<StatementSpectrum> statements;  // executable statements, in line order
  std::vector<bool> passed;  // per test, suite order
  int passing() const;
  int failing() const;
  const StatementSpectrum* at(int line) const;
};

/// Runs every test and tallies which executable statements each one reaches.
Spectra collect_spectra(const lang::Program& p, const TestSuite& tests, std::uint64_t step_limit = kDefaultStepLimit,
                        unsigned jobs = 1);

}  // namespace minthint::exec
