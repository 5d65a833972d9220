// Acceptance checks, one line per criterion: "PASS"/"FAIL", the measured
// values and the runtime. Exits non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "minthint/driver/report.hpp"
#include "minthint/stats/spearman.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace minthint;
using namespace minthint::driver;
using hints::HintKind;
using V = std::vector<std::int64_t>;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", v);
  return buf;
}

std::string fmt(double v, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

int failures = 0;

void criterion(int n, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.note(std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) o.check(false, "runtime " + fmt(secs, 2) + " s >= " + fmt(limit_s, 0) + " s");
  failures += !o.pass;
  std::printf("%s criterion %d (%s): %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", n, title, o.detail.c_str(), secs);
  std::fflush(stdout);
}

struct CrossProduct {
  V i, jk, y, int_div, exact_div;
};

CrossProduct cross_product() {
  const std::int64_t lcm = 26771144400;  // lcm(1..25): j * lcm / k orders exactly like j / k
  CrossProduct d;
  for (std::int64_t i = 1; i <= 2; ++i) {
    for (std::int64_t j = 1; j <= 5; ++j) {
      for (std::int64_t k = 1; k <= 25; ++k) {
        d.i.push_back(i);
        d.jk.push_back(j * k);
        d.y.push_back(i + j * k - 10);
        d.int_div.push_back(j / k);
        d.exact_div.push_back(j * lcm / k);
      }
    }
  }
  return d;
}

bool near(double got, double want, double tol) { return std::abs(got - want) <= tol; }

bool mentions(const hints::Hint& h, const std::string& text) {
  if (h.text() == text) return true;
  for (const auto& c : h.constituents) {
    if (c.action() == text) return true;
  }
  return false;
}

std::vector<lang::NormalizedTarget> all_targets(const lang::Program& p) {
  std::vector<lang::NormalizedTarget> out;
  for (const auto* s : p.statements()) {
    try {
      auto ts = lang::normalize(*p.function_of(s->line), *s);
      out.insert(out.end(), ts.begin(), ts.end());
    } catch (const UnsupportedStatement&) {
    }
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "rank correlations on y = i + j*k - 10", 1.0, [](Outcome& o) {
    auto d = cross_product();
    double jk = stats::spearman(d.jk, d.y), i = stats::spearman(d.i, d.y);
    double partial = stats::spearman_partial(d.y, d.i, {d.jk});
    o.note("rows=" + std::to_string(d.y.size()) + " spearman(j*k,y)=" + fmt(jk) + " spearman(i,y)=" + fmt(i) +
           " partial(y,i|j*k)=" + fmt(partial));
    o.check(near(jk, 0.9997, 0.005), "spearman(j*k,y)");
    o.check(near(i, 0.0230, 0.005), "spearman(i,y)");
    o.check(near(partial, 0.9116, 0.005), "partial");
  });

  criterion(2, "likelihood of j / k and the arith fixture", 0, [](Outcome& o) {
    auto d = cross_product();
    double real_div = std::abs(stats::spearman(d.exact_div, d.y));
    double int_div = std::abs(stats::spearman(d.int_div, d.y));
    o.note("likelihood(j/k, real quotient)=" + fmt(real_div) + " (truncating division gives " + fmt(int_div) + ")");
    o.check(near(real_div, 0.2109, 0.005), "likelihood(j/k)");
    auto f = testing_support::load("arith");
    auto r = run_pipeline(f.program, f.tests, {});
    std::size_t at = 0;
    for (std::size_t k = 0; k < r.hints.size() && !at; ++k) {
      if (r.hints[k].line == 2 && mentions(r.hints[k], "Replace j / k with j * k")) at = k + 1;
    }
    o.note("\"Replace j / k with j * k\" at rank " + std::to_string(at) + " of " + std::to_string(r.hints.size()));
    o.check(at > 0, "replacement hint emitted");
  });

  criterion(3, "scoring identities", 0, [](Outcome& o) {
    std::vector<lang::Variable> vs{{"a", lang::Type::scalar_of(lang::Scalar::Int), 0, true, 1},
                                   {"b", lang::Type::scalar_of(lang::Scalar::Int), 1, true, 1}};
    auto ex = [&](const char* s) { return lang::parse_expression(s, vs); };
    auto rep = hints::gen_hint(ex("a - b"), {ex("a + b"), 1, 0}, 0.43, 0.0, true);
    auto ins = hints::gen_hint(ex("a * b * a"), {ex("a"), 4, 1}, 0.62, 0.1, false);
    auto rem = hints::remove_hint(ex("b"), 0.38, 2);
    auto comp = hints::make_compound({ins, rem});
    o.note("replace=" + fmt(rep.score, 17) + " insert=" + fmt(ins.score, 17) + " remove=" + fmt(rem.score, 17) +
           " compound=" + fmt(comp.score, 17));
    o.check(rep.kind == HintKind::Replace && rep.score == 1.0, "replace score 1");
    o.check(ins.kind == HintKind::Insert && ins.score == 0.62, "insert score 0.62");
    o.check(rem.kind == HintKind::Remove && rem.score == 0.62, "remove score 0.62");
    o.check(comp.score == std::max(ins.score, rem.score), "compound max");
    o.check(hints::make_compound({rep, rem}).score == 1.0, "compound with replace");
  });

  criterion(4, "esc_mini end to end", 30.0, [](Outcome& o) {
    auto f = testing_support::load("esc_mini");
    auto r = run_pipeline(f.program, f.tests, {});
    o.check(!r.hints.empty(), "hints emitted");
    if (r.hints.empty()) return;
    o.note("top: line " + std::to_string(r.hints[0].line) + " \"" + r.hints[0].text() + "\" score " + fmt(r.hints[0].score));
    o.check(r.hints[0].line == 4 && r.hints[0].text() == "Replace s[i] == '\\0' with s[i + 1] == '\\0'", "top hint");
    bool compound = false;
    for (const auto& h : r.hints) {
      if (h.kind == HintKind::Compound && h.line == 4 && h.score == 1.0 && mentions(h, "Insert s[i + 1] <= '\\0'") &&
          mentions(h, "Remove s[i] == '\\0'")) {
        compound = true;
        o.note("compound: \"" + h.text() + "\"");
      }
    }
    o.check(compound, "Insert+Remove compound with score 1");
  });

  criterion(5, "oracle equivalences", 60.0, [](Outcome& o) {
    std::mt19937 rng(2024);
    double worst = 0;
    for (int n = 0; n < 1000; ++n) {
      std::size_t len = 3 + rng() % 40;
      auto a = oracles::random_tied(rng, len, 2 + static_cast<int>(rng() % 8));
      auto b = oracles::random_tied(rng, len, 2 + static_cast<int>(rng() % 8));
      worst = std::max(worst, std::abs(stats::spearman(a, b) - oracles::brute_spearman(a, b)));
    }
    double worst_partial = 0;
    int partial_cases = 0;
    while (partial_cases < 1000) {
      std::size_t len = 6 + rng() % 40;
      auto a = oracles::random_tied(rng, len, 12), b = oracles::random_tied(rng, len, 12), c = oracles::random_tied(rng, len, 12);
      double rab = oracles::brute_spearman(a, b), rac = oracles::brute_spearman(a, c), rbc = oracles::brute_spearman(b, c);
      double den = (1 - rac * rac) * (1 - rbc * rbc);
      if (den < 1e-6) continue;
      ++partial_cases;
      worst_partial = std::max(worst_partial, std::abs(stats::spearman_partial(a, b, {c}) - (rab - rac * rbc) / std::sqrt(den)));
    }
    std::size_t pairs = 0, mismatches = 0;
    for (auto [alphabet, bound] : {std::pair<std::string, std::size_t>{"a", 6}, {"ab", 4}}) {
      std::vector<std::string> trees;
      for (std::size_t n = 1; n <= bound; ++n) {
        auto level = oracles::all_trees(n, alphabet);
        trees.insert(trees.end(), level.begin(), level.end());
      }
      for (const auto& a : trees) {
        auto dist = oracles::bfs(a, alphabet, bound);
        auto ta = oracles::to_ordered(a);
        for (const auto& b : trees) {
          ++pairs;
          mismatches += hints::tree_edit_distance(ta, oracles::to_ordered(b)) != dist.at(b);
        }
      }
    }
    o.note("spearman max err " + sci(worst) + ", partial max err " + sci(worst_partial) +
           ", tree pairs " + std::to_string(pairs) + " mismatches " + std::to_string(mismatches));
    o.check(worst <= 1e-9, "spearman vs brute force");
    o.check(worst_partial <= 1e-9, "partial vs closed form");
    o.check(mismatches == 0, "edit distance vs exhaustive search");
  });

  criterion(6, "property suites", 0, [](Outcome& o) {
    std::mt19937 rng(7);
    bool bounded = true, invariant = true, negation = true;
    for (int n = 0; n < 500; ++n) {
      auto a = oracles::random_tied(rng, 20, 9), b = oracles::random_tied(rng, 20, 9);
      double r = stats::spearman(a, b);
      bounded = bounded && std::abs(r) <= 1 + 1e-12;
      V t(a.size()), neg(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) {
        t[i] = a[i] * a[i] * a[i] + 7;
        neg[i] = -a[i];
      }
      invariant = invariant && std::abs(stats::spearman(t, b) - r) < 1e-12;
      bool constant = std::all_of(a.begin(), a.end(), [&](auto v) { return v == a[0]; });
      negation = negation && (constant || std::abs(stats::spearman(a, neg) + 1) < 1e-12);
    }
    o.check(bounded, "|spearman| <= 1");
    o.check(invariant, "increasing-transform invariance");
    o.check(negation, "spearman(a,-a) = -1");

    bool metric = true;
    for (int n = 0; n < 300; ++n) {
      auto a = oracles::to_ordered(oracles::random_tree(rng, 1 + rng() % 7, "ab"));
      auto b = oracles::to_ordered(oracles::random_tree(rng, 1 + rng() % 7, "ab"));
      auto c = oracles::to_ordered(oracles::random_tree(rng, 1 + rng() % 7, "ab"));
      auto ab = hints::tree_edit_distance(a, b);
      metric = metric && ab == hints::tree_edit_distance(b, a) && hints::tree_edit_distance(a, a) == 0 &&
               hints::tree_edit_distance(a, c) <= ab + hints::tree_edit_distance(b, c) &&
               (ab == 0) == (a.labels == b.labels && a.children == b.children);
    }
    o.check(metric, "edit distance is a metric");

    std::size_t witnesses = 0, replay_failures = 0;
    for (const char* task : {"esc_mini", "arith", "wrong_operand", "loop_bound", "mid3"}) {
      auto f = testing_support::load(task);
      for (const auto& target : all_targets(f.program)) {
        for (const auto& t : f.tests) {
          if (exec::run_test(f.program, t).passed) continue;
          auto r = transformer::angelic_search(f.program, target, t);
          if (r.status != transformer::SearchStatus::Witness) continue;
          ++witnesses;
          replay_failures += !transformer::replay_with(f.program, target, t, r.values).verdict.passed;
        }
      }
    }
    o.note(std::to_string(witnesses) + " witnesses replayed, " + std::to_string(replay_failures) + " failed");
    o.check(replay_failures == 0 && witnesses > 0, "angelic witnesses replay");

    double max_noise = 0;
    for (const char* task : {"arith", "esc_mini", "loop_bound", "mid3", "or_and"}) {
      auto f = testing_support::load(task, "repaired.mh");
      for (const auto* s : f.program.statements()) {
        try {
          lang::normalize(*f.program.function_of(s->line), *s);
        } catch (const UnsupportedStatement&) {
          continue;
        }
        max_noise = std::max(max_noise, estimate_noise(f.program, f.program, s->line, f.tests).percentage);
      }
    }
    o.check(max_noise == 0.0, "estimate_noise(P, P) = 0");

    auto f = testing_support::load("loop_bound");
    Config cfg;
    cfg.seed = 99;
    auto render = [&] {
      std::ostringstream out;
      write_hint_json(out, run_pipeline(f.program, f.tests, cfg).hints);
      return out.str();
    };
    o.check(render() == render(), "pipeline determinism");
  });

  criterion(7, "false-positive elimination on the corpus", 300.0, [](Outcome& o) {
    auto tasks = load_manifest(testing_support::corpus("manifest.json"));
    Config cfg;
    auto report = run_corpus(tasks, cfg, true);
    std::size_t qualifying = 0, violations = 0, eliminated = 0, with_elimination = 0;
    for (std::size_t i = 0; i < report.tasks.size(); ++i) {
      const auto& t = report.tasks[i];
      o.check(t.ok(), t.id + ": " + t.error);
      if (!t.ok()) continue;
      eliminated += t.eliminated;
      with_elimination += t.eliminated > 0;
      for (const auto& s : t.result->statements) {
        if (tasks[i].fault_line && s.line == *tasks[i].fault_line) continue;
        for (const auto& target : s.targets) {
          if (target.outcome != transformer::OutcomeKind::Derived) continue;
          bool argmax = target.rhs_likelihood > cfg.delta && target.top_likelihood - target.rhs_likelihood <= hints::kTieTolerance;
          if (!argmax) continue;
          ++qualifying;
          bool only_retain = !target.hints.empty() && std::all_of(target.hints.begin(), target.hints.end(), [](const hints::Hint& h) {
            return h.kind == HintKind::RetainStatement;
          });
          if (!only_retain) {
            ++violations;
            o.check(false, t.id + " line " + std::to_string(s.line));
          }
        }
      }
    }
    o.note(std::to_string(report.tasks.size()) + " tasks, " + std::to_string(qualifying) +
           " non-faulty targets with the RHS most likely, " + std::to_string(violations) + " violations, " +
           std::to_string(eliminated) + " statements eliminated across " + std::to_string(with_elimination) + " tasks");
    o.check(eliminated >= 1, "at least one eliminated statement");
  });

  criterion(8, "noise tolerance", 0, [](Outcome& o) {
    auto f = testing_support::load("wrong_operand");
    PipelineOptions opts;
    opts.transform = [](const lang::NormalizedTarget& t, transformer::StateTransformer s) {
      return transformer::inject_noise(s, t, 0.2, 2024);
    };
    auto r = run_pipeline(f.program, f.tests, {}, opts);
    std::size_t at = 0;
    for (std::size_t k = 0; k < r.hints.size() && k < 5 && !at; ++k) {
      const auto& h = r.hints[k];
      if (h.line == 2 && (mentions(h, "Replace a + 3 with a + b") || mentions(h, "Replace 3 with b"))) at = k + 1;
    }
    o.note("20% of transformer pairs perturbed; correct replacement at rank " + std::to_string(at));
    o.check(at > 0, "correct replacement in the top 5");
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
