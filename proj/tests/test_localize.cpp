#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "minthint/error.hpp"
#include "minthint/localize/ochiai.hpp"
#include "support.hpp"

using namespace minthint;
using namespace minthint::localize;

TEST(Ochiai, Formula) {
  exec::StatementSpectrum s{1, 3, 2, 5, 1};
  EXPECT_NEAR(ochiai(s), 2.0 / std::sqrt(3.0 * 5.0), 1e-12);
  exec::StatementSpectrum never{2, 4, 0, 4, 3};
  EXPECT_EQ(ochiai(never), 0.0);
  exec::StatementSpectrum only_failing{3, 0, 3, 9, 0};
  EXPECT_NEAR(ochiai(only_failing), 1.0, 1e-12);
}

TEST(Ochiai, BoundedAndMonotone) {
  std::mt19937 rng(3);
  for (int n = 0; n < 2000; ++n) {
    int ef = static_cast<int>(rng() % 10), nf = static_cast<int>(rng() % 10);
    int ep = static_cast<int>(rng() % 10), np = static_cast<int>(rng() % 10);
    if (ef + nf == 0) continue;
    double v = ochiai({1, ep, ef, np, nf});
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0 + 1e-12);
    if (ep > 0) {
      EXPECT_GE(ochiai({1, ep - 1, ef, np + 1, nf}), v - 1e-12);
    }
  }
}

TEST(Rank, OrdersByScoreThenLine) {
  exec::Spectra sp;
  sp.passed = {true, true, false};
  sp.statements = {{1, 2, 1, 0, 0}, {2, 0, 1, 2, 0}, {3, 0, 1, 2, 0}, {4, 2, 0, 0, 1}, {5, 1, 1, 1, 0}};
  auto r = rank_statements(sp, 10);
  std::vector<int> lines;
  for (const auto& s : r) lines.push_back(s.line);
  EXPECT_EQ(lines, (std::vector<int>{2, 3, 5, 1}));
  EXPECT_EQ(rank_statements(sp, 2).size(), 2u);
  for (std::size_t i = 1; i < r.size(); ++i) EXPECT_GE(r[i - 1].score, r[i].score);
}

TEST(Rank, NoFailingTests) {
  exec::Spectra sp;
  sp.passed = {true, true};
  sp.statements = {{1, 2, 0, 0, 0}};
  EXPECT_THROW(rank_statements(sp, 5), NoFailingTests);
}

TEST(Rank, CorpusFaultsAreInTopFive) {
  struct Case {
    const char* task;
    int line;
  };
  for (auto c : {Case{"esc_mini", 4}, Case{"arith", 2}, Case{"max_op", 3}, Case{"wrong_operand", 2},
                 Case{"or_and", 3}, Case{"missing_operand", 2}, Case{"superfluous", 2}, Case{"loop_bound", 4},
                 Case{"mid3", 7}, Case{"ternary_return", 3}}) {
    auto f = testing_support::load(c.task);
    auto r = localize_faults(f.program, f.tests, 5);
    EXPECT_TRUE(std::any_of(r.begin(), r.end(), [&](const Suspicious& s) { return s.line == c.line; })) << c.task;
  }
}

TEST(Rank, Mid3ClassicSuite) {
  auto f = testing_support::load("mid3", "faulty.mh", "tests6.jsonl");
  auto r = localize_faults(f.program, f.tests, 5);
  ASSERT_FALSE(r.empty());
  EXPECT_EQ(r.front().line, 7);
}
