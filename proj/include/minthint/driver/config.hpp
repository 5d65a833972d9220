#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "minthint/error.hpp"
#include "minthint/hints/synthesis.hpp"
#include "minthint/transformer/st_trans.hpp"

namespace minthint::driver {

class ConfigError : public Error {
 public:
  using Error::Error;
};

enum class Format { Table, Json };

Format parse_format(const std::string& s);

struct Config {
  std::size_t k = 5;  // localization depth
  std::size_t m = 4;  // expression size bound
  double delta = 0.4;
  double beta = 0.1;
  double gamma = 0.6;
  std::size_t edit_threshold = hints::kDefaultEditThreshold;
  transformer::AngelicConfig angelic;
  std::uint64_t seed = 0;
  double passing_fraction = 1.0;
  unsigned jobs = 1;
  Format format = Format::Table;

  /// Throws ConfigError unless 0 < beta <= delta < 1, 0 < gamma < 1, k, m >= 1
  /// and the passing fraction lies in (0, 1].
  void validate() const;

  hints::SynthesisConfig synthesis() const;
  transformer::TransformerConfig transformer() const;
};

}  // namespace minthint::driver
