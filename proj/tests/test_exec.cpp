#include <gtest/gtest.h>

#include <map>
#include <set>

#include "minthint/error.hpp"
#include "minthint/exec/spectra.hpp"
#include "minthint/lang/parser.hpp"
#include "support.hpp"

using namespace minthint;
using namespace minthint::exec;
using lang::Scalar;

namespace {

Value I(std::int64_t v) { return Value::of(Scalar::Int, v); }

lang::Program prog(const char* src) { return lang::parse_program(src); }

}  // namespace

TEST(Execute, ArithmeticAndReturn) {
  auto p = prog("int f(int a, int b) {\n  int c = a * b + 1;\n  return c;\n}");
  auto r = execute(p, {I(3), I(4)});
  EXPECT_FALSE(r.fault);
  ASSERT_EQ(r.output.size(), 1u);
  EXPECT_EQ(r.output[0].scalar, 13);
}

TEST(Execute, TruncatingDivisionAndModulo) {
  auto p = prog("int f(int a, int b) {\n  print(a / b);\n  return a % b;\n}");
  auto r = execute(p, {I(-7), I(2)});
  ASSERT_EQ(r.output.size(), 2u);
  EXPECT_EQ(r.output[0].scalar, -3);
  EXPECT_EQ(r.output[1].scalar, -1);
}

TEST(Execute, ShortCircuitAvoidsFault) {
  auto p = prog("bool f(int a) {\n  return a != 0 && 10 / a > 1;\n}");
  auto r = execute(p, {I(0)});
  EXPECT_FALSE(r.fault);
  EXPECT_EQ(r.output[0].scalar, 0);
}

TEST(Execute, FaultsBecomeTokens) {
  auto div = prog("int f(int a) {\n  return 10 / a;\n}");
  auto r = execute(div, {I(0)});
  ASSERT_TRUE(r.fault);
  EXPECT_EQ(*r.fault, "division-by-zero");
  EXPECT_EQ(r.output_json().back(), "<fault:division-by-zero>");

  auto idx = prog("int f(int a[3], int i) {\n  return a[i];\n}");
  auto r2 = execute(idx, {Value::array(Scalar::Int, {1, 2, 3}), I(3)});
  ASSERT_TRUE(r2.fault);
  EXPECT_EQ(*r2.fault, "index-out-of-bounds");

  auto ovf = prog("int f(int a) {\n  return a * a;\n}");
  auto r3 = execute(ovf, {I(std::int64_t{1} << 40)});
  ASSERT_TRUE(r3.fault);
  EXPECT_EQ(*r3.fault, "overflow");
}

TEST(Execute, StepLimit) {
  auto p = prog("int f(int n) {\n  int i = 0;\n  while (i < n) {\n    i = i + 1;\n  }\n  return i;\n}");
  RunOptions small;
  small.step_limit = 50;
  auto r = execute(p, {I(1000)}, small);
  ASSERT_TRUE(r.fault);
  EXPECT_EQ(*r.fault, "step-budget");
  auto ok = execute(p, {I(10)});
  EXPECT_FALSE(ok.fault);
  EXPECT_EQ(ok.output.back().scalar, 10);
}

TEST(Execute, Deterministic) {
  auto f = testing_support::load("loop_bound");
  for (const auto& t : f.tests) {
    auto a = execute(f.program, t.args);
    auto b = execute(f.program, t.args);
    EXPECT_EQ(a.output, b.output);
    EXPECT_EQ(a.steps, b.steps);
    EXPECT_EQ(a.covered, b.covered);
  }
}

TEST(RunTest, OutputMustMatchExactly) {
  auto p = prog("int f(int a) {\n  print(a);\n  return a + 1;\n}");
  TestCase good{"g", {I(1)}, {I(1), I(2)}};
  TestCase short_expect{"s", {I(1)}, {I(2)}};
  TestCase wrong{"w", {I(1)}, {I(1), I(3)}};
  EXPECT_TRUE(run_test(p, good).passed);
  EXPECT_FALSE(run_test(p, short_expect).passed);
  EXPECT_FALSE(run_test(p, wrong).passed);
}

TEST(RunTest, FaultNeverPasses) {
  auto p = prog("int f(int a) {\n  return 10 / a;\n}");
  TestCase t{"t", {I(0)}, {I(0)}};
  EXPECT_FALSE(run_test(p, t).passed);
}

TEST(Tests, ParseRejectsBadArguments) {
  auto p = prog("int f(int a) {\n  return a;\n}");
  EXPECT_THROW(parse_tests(R"({"id":"x","args":[true],"expect":[1]})", p), TestSuiteError);
  EXPECT_THROW(parse_tests(R"({"id":"x","args":[1,2],"expect":[1]})", p), TestSuiteError);
  EXPECT_THROW(parse_tests("not json", p), TestSuiteError);
  auto ok = parse_tests("\n{\"id\":\"x\",\"args\":[1],\"expect\":[1]}\n\n", p);
  EXPECT_EQ(ok.size(), 1u);
}

TEST(Tests, CharArraysRoundTrip) {
  auto f = testing_support::load("esc_mini");
  ASSERT_FALSE(f.tests.empty());
  for (const auto& t : f.tests) {
    auto j = exec::to_json(t);
    auto again = parse_tests(j.dump(), f.program);
    ASSERT_EQ(again.size(), 1u);
    EXPECT_EQ(again[0].args, t.args);
    EXPECT_EQ(again[0].expect, t.expect);
  }
}

TEST(Spectra, CountsAreConsistent) {
  for (const char* task : {"esc_mini", "mid3", "loop_bound", "arith"}) {
    auto f = testing_support::load(task);
    auto s = collect_spectra(f.program, f.tests);
    EXPECT_EQ(s.passed.size(), f.tests.size());
    for (const auto& st : s.statements) {
      EXPECT_EQ(st.ep + st.np, s.passing()) << task << ":" << st.line;
      EXPECT_EQ(st.ef + st.nf, s.failing()) << task << ":" << st.line;
      EXPECT_GE(st.ep, 0);
      EXPECT_GE(st.ef, 0);
    }
  }
}

// Recounts spectra from raw execution traces.
TEST(Spectra, MatchTraceReplay) {
  auto f = testing_support::load("mid3", "faulty.mh", "tests6.jsonl");
  auto s = collect_spectra(f.program, f.tests);
  std::map<int, std::pair<int, int>> counts;  // line -> (ep, ef)
  int passing = 0;
  for (const auto& t : f.tests) {
    std::vector<int> trace;
    RunOptions o;
    o.trace = &trace;
    auto v = run_test(f.program, t, o);
    passing += v.passed;
    std::set<int> lines(trace.begin(), trace.end());
    for (int l : lines) (v.passed ? counts[l].first : counts[l].second)++;
  }
  EXPECT_EQ(s.passing(), passing);
  EXPECT_EQ(s.failing(), static_cast<int>(f.tests.size()) - passing);
  // Only (2, 1, 3) reaches the faulty assignment in the classic suite.
  EXPECT_EQ(s.failing(), 1);
  for (const auto& st : s.statements) {
    auto it = counts.find(st.line);
    int ep = it == counts.end() ? 0 : it->second.first;
    int ef = it == counts.end() ? 0 : it->second.second;
    EXPECT_EQ(st.ep, ep) << st.line;
    EXPECT_EQ(st.ef, ef) << st.line;
  }
}

TEST(Spectra, ParallelMatchesSequential) {
  auto f = testing_support::load("arith");
  auto a = collect_spectra(f.program, f.tests, kDefaultStepLimit, 1);
  auto b = collect_spectra(f.program, f.tests, kDefaultStepLimit, 4);
  EXPECT_EQ(a.passed, b.passed);
  ASSERT_EQ(a.statements.size(), b.statements.size());
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    EXPECT_EQ(a.statements[i].ep, b.statements[i].ep);
    EXPECT_EQ(a.statements[i].ef, b.statements[i].ef);
  }
}

TEST(ObserveStates, PairsFollowExecution) {
  auto p = prog("int f(int n) {\n  int s = 0;\n  int i = 0;\n  while (i < n) {\n    s = s + i;\n    i = i + 1;\n  }\n  return s;\n}");
  auto targets = lang::normalize(*p.function_of(5), *p.statement_at(5));
  TestCase t{"t", {I(4)}, {I(6)}};
  auto pairs = observe_states(p, targets[0], t);
  ASSERT_EQ(pairs.size(), 4u);
  std::int64_t expect_s = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    EXPECT_EQ(pairs[k].before.find("s")->value.scalar, expect_s);
    expect_s += static_cast<std::int64_t>(k);
    EXPECT_EQ(pairs[k].after.find("s")->value.scalar, expect_s);
    EXPECT_EQ(pairs[k].after.find("i")->value.scalar, static_cast<std::int64_t>(k));
  }
  TestCase never{"z", {I(0)}, {I(0)}};
  EXPECT_THROW(observe_states(p, targets[0], never), NotExecuted);
  TestCase failing{"x", {I(4)}, {I(7)}};
  EXPECT_THROW(observe_states(p, targets[0], failing), PreconditionError);
}
