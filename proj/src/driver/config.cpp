#include "minthint/driver/config.hpp"

namespace minthint::driver {

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json" || s == "jsonl") return Format::Json;
  throw ConfigError("unknown format '" + s + "' (expected table or json)");
}

void Config::validate() const {
  if (!(beta > 0.0 && beta <= delta && delta < 1.0)) throw ConfigError("need 0 < beta <= delta < 1");
  if (!(gamma > 0.0 && gamma < 1.0)) throw ConfigError("need 0 < gamma < 1");
  if (k < 1) throw ConfigError("k must be at least 1");
  if (m < 1) throw ConfigError("m must be at least 1");
  if (!(passing_fraction > 0.0 && passing_fraction <= 1.0)) throw ConfigError("passing fraction must lie in (0, 1]");
  if (angelic.window_lo > angelic.window_hi) throw ConfigError("angelic window is empty");
  if (angelic.max_hits < 1) throw ConfigError("max hits must be at least 1");
}

hints::SynthesisConfig Config::synthesis() const {
  hints::SynthesisConfig s;
  s.delta = delta;
  s.beta = beta;
  s.gamma = gamma;
  s.edit_threshold = edit_threshold;
  s.seed = seed;
  return s;
}

transformer::TransformerConfig Config::transformer() const {
  transformer::TransformerConfig t;
  t.angelic = angelic;
  t.passing_fraction = passing_fraction;
  t.jobs = 1;
  return t;
}

}  // namespace minthint::driver
