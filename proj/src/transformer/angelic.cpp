#include "minthint/transformer/angelic.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>

#include "minthint/lang/expr_utils.hpp"

namespace minthint::transformer {

using exec::Frame;
using lang::Scalar;

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::Witness: return "witness";
    case SearchStatus::NoWitness: return "no-witness";
    case SearchStatus::Timeout: return "timeout";
    case SearchStatus::NotTraversed: return "not-traversed";
  }
  return "?";
}

std::vector<std::int64_t> value_domain(const lang::Program& p, const lang::NormalizedTarget& target,
                                       const exec::TestCase& t, const AngelicConfig& cfg) {
  switch (target.lhs_type) {
    case Scalar::Bool: return {0, 1};
    case Scalar::Char: {
      std::vector<std::int64_t> out(128);
      for (int c = 0; c < 128; ++c) out[static_cast<std::size_t>(c)] = c;
      return out;
    }
    default: break;
  }
  std::set<std::int64_t> vals;
  for (auto v = cfg.window_lo; v <= cfg.window_hi; ++v) vals.insert(v);
  if (const auto* fn = p.function_of(target.line)) {
    for (const auto& c : lang::constants_in(*fn)) {
      if (c->type == Scalar::Int) {
        vals.insert(c->value);
        if (c->value != std::numeric_limits<std::int64_t>::min()) vals.insert(-c->value);
      }
    }
  }
  for (const auto& e : t.expect) {
    if (e.type == Scalar::Int) vals.insert(e.scalar);
  }
  std::vector<std::int64_t> out(vals.begin(), vals.end());
  std::stable_sort(out.begin(), out.end(), [](std::int64_t a, std::int64_t b) {
    auto mag = [](std::int64_t v) { return v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v); };
    return mag(a) != mag(b) ? mag(a) < mag(b) : a < b;
  });
  return out;
}

namespace {

struct NeedChoice {};

class Forcing : public exec::Probe {
 public:
  Forcing(const std::vector<std::int64_t>& prefix, int cap) : prefix_(prefix), cap_(cap) {}
  std::optional<std::int64_t> intercept(const Frame&) override {
    auto k = hits_++;
    if (k < prefix_.size()) return prefix_[k];
    if (static_cast<int>(k) < cap_) throw NeedChoice{};
    return std::nullopt;
  }

 private:
  const std::vector<std::int64_t>& prefix_;
  std::size_t hits_ = 0;
  int cap_;
};

class Search {
 public:
  Search(const lang::Program& p, const lang::NormalizedTarget& target, const exec::TestCase& t,
         const AngelicConfig& cfg)
      : p_(p), target_(target), t_(t), cfg_(cfg), domain_(value_domain(p, target, t, cfg)),
        start_(std::chrono::steady_clock::now()) {}

  AngelicResult run() {
    std::vector<std::int64_t> prefix;
    Step first = attempt(prefix);
    if (first == Step::Completed) {
      result_.status = SearchStatus::NotTraversed;
      return result_;
    }
    if (first == Step::Expired) {
      result_.status = SearchStatus::Timeout;
      return result_;
    }
    result_.status = dfs(prefix);
    return result_;
  }

 private:
  enum class Step { Passed, Completed, Branch, Expired };

  bool expired() const {
    if (result_.steps > cfg_.step_budget) return true;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    return ms.count() > cfg_.time_budget_ms;
  }

  // One replay. Completed means the run finished (pass or fail) without
  // asking for another value; Passed is a completed passing run.
  Step attempt(const std::vector<std::int64_t>& prefix) {
    if (expired()) return Step::Expired;
    Forcing probe(prefix, cfg_.max_hits);
    exec::RunOptions opts;
    opts.step_limit = cfg_.run_step_limit;
    opts.target = &target_;
    opts.probe = &probe;
    opts.step_sink = &result_.steps;
    ++result_.replays;
    try {
      return exec::run_test(p_, t_, opts).passed ? Step::Passed : Step::Completed;
    } catch (const NeedChoice&) {
      return Step::Branch;
    }
  }

  SearchStatus dfs(std::vector<std::int64_t>& prefix) {
    for (auto v : domain_) {
      prefix.push_back(v);
      Step s = attempt(prefix);
      if (s == Step::Expired) return SearchStatus::Timeout;
      if (s == Step::Passed) {
        result_.values = prefix;
        return SearchStatus::Witness;
      }
      if (s == Step::Branch) {
        SearchStatus sub = dfs(prefix);
        if (sub != SearchStatus::NoWitness) return sub;
      }
      prefix.pop_back();
    }
    return SearchStatus::NoWitness;
  }

  const lang::Program& p_;
  const lang::NormalizedTarget& target_;
  const exec::TestCase& t_;
  const AngelicConfig& cfg_;
  std::vector<std::int64_t> domain_;
  std::chrono::steady_clock::time_point start_;
  AngelicResult result_;
};

class ForcedRecorder : public exec::Probe {
 public:
  ForcedRecorder(const lang::FunctionDef& f, const lang::NormalizedTarget& t, const std::vector<std::int64_t>& v)
      : fn_(f), target_(t), values_(v) {}
  std::optional<std::int64_t> intercept(const Frame&) override {
    if (next_ < values_.size()) return values_[next_++];
    ++next_;
    return std::nullopt;
  }
  void record(const Frame& env, std::int64_t v) override {
    auto before = exec::capture_state(fn_, target_, env);
    auto after = exec::apply_lhs(target_, before, v);
    pairs.push_back(exec::StatePair{std::move(before), std::move(after)});
  }
  std::vector<exec::StatePair> pairs;

 private:
  const lang::FunctionDef& fn_;
  const lang::NormalizedTarget& target_;
  const std::vector<std::int64_t>& values_;
  std::size_t next_ = 0;
};

}  // namespace

AngelicResult angelic_search(const lang::Program& p, const lang::NormalizedTarget& target, const exec::TestCase& t,
                             const AngelicConfig& cfg) {
  return Search(p, target, t, cfg).run();
}

Replay replay_with(const lang::Program& p, const lang::NormalizedTarget& target, const exec::TestCase& t,
                   const std::vector<std::int64_t>& values, std::uint64_t step_limit) {
  ForcedRecorder rec(p.entry(), target, values);
  exec::RunOptions opts;
  opts.step_limit = step_limit;
  opts.target = &target;
  opts.probe = &rec;
  Replay out;
  out.verdict = exec::run_test(p, t, opts);
  out.pairs = std::move(rec.pairs);
  return out;
}

}  // namespace minthint::transformer
