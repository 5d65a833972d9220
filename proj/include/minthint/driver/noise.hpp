#pragma once

#include "minthint/driver/config.hpp"

namespace minthint::driver {

struct NoiseReport {
  std::size_t pairs = 0;  // faulty-side pairs compared
  std::size_t noisy = 0;  // of those, absent from the repaired program's transformer
  double percentage = 0.0;
};

/// The noise-free transformer at a site: every pair the repaired program
/// produces there on the suite, by concrete execution.
transformer::StateTransformer concrete_transformer(const lang::Program& repaired, const lang::NormalizedTarget& target,
                                                   const exec::TestSuite& tests, std::uint64_t step_limit);

/// Percentage of the faulty program's derived pairs at `line` that the
/// repaired program never produces. Both programs must number the statement
/// alike. Throws RepairedStillFails when the repaired program fails a test.
NoiseReport estimate_noise(const lang::Program& faulty, const lang::Program& repaired, int line,
                           const exec::TestSuite& tests, const Config& cfg = {});

}  // namespace minthint::driver
