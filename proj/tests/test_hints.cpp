#include <gtest/gtest.h>

#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

#include "minthint/exec/eval.hpp"
#include "minthint/hints/rank.hpp"
#include "minthint/hints/synthesis.hpp"
#include "minthint/hints/tree_edit.hpp"
#include "minthint/lang/parser.hpp"
#include "minthint/lang/printer.hpp"
#include "oracles.hpp"

using namespace minthint;
using namespace minthint::hints;
using lang::Scalar;
using namespace oracles;

TEST(TreeEdit, ExhaustiveUnlabeledShapesUpToSix) {
  auto trees = std::vector<std::string>{};
  for (std::size_t n = 1; n <= 6; ++n) {
    auto level = all_trees(n, "a");
    trees.insert(trees.end(), level.begin(), level.end());
  }
  ASSERT_EQ(trees.size(), 1u + 1u + 2u + 5u + 14u + 42u);
  for (const auto& a : trees) {
    auto dist = bfs(a, "a", 6);
    auto ta = to_ordered(a);
    for (const auto& b : trees) EXPECT_EQ(tree_edit_distance(ta, to_ordered(b)), dist.at(b)) << a << " " << b;
  }
}

TEST(TreeEdit, ExhaustiveLabeledUpToFour) {
  std::vector<std::string> trees;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto level = all_trees(n, "ab");
    trees.insert(trees.end(), level.begin(), level.end());
  }
  for (const auto& a : trees) {
    auto dist = bfs(a, "ab", 4);
    auto ta = to_ordered(a);
    for (const auto& b : trees) EXPECT_EQ(tree_edit_distance(ta, to_ordered(b)), dist.at(b)) << a << " " << b;
  }
}

TEST(TreeEdit, RandomPairsMatchForestRecurrence) {
  std::mt19937 rng(17);
  std::unordered_map<std::string, std::size_t> memo;
  for (int n = 0; n < 400; ++n) {
    auto a = random_tree(rng, 1 + rng() % 9, "abc");
    auto b = random_tree(rng, 1 + rng() % 9, "abc");
    EXPECT_EQ(tree_edit_distance(to_ordered(a), to_ordered(b)), forest_distance(a, b, memo)) << a << " " << b;
  }
}

TEST(TreeEdit, IsAMetric) {
  std::mt19937 rng(23);
  for (int n = 0; n < 300; ++n) {
    auto a = to_ordered(random_tree(rng, 1 + rng() % 7, "ab"));
    auto b = to_ordered(random_tree(rng, 1 + rng() % 7, "ab"));
    auto c = to_ordered(random_tree(rng, 1 + rng() % 7, "ab"));
    std::size_t ab = tree_edit_distance(a, b), ba = tree_edit_distance(b, a);
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(tree_edit_distance(a, a), 0u);
    EXPECT_EQ(ab == 0, a.labels == b.labels && a.children == b.children);
    EXPECT_LE(tree_edit_distance(a, c), ab + tree_edit_distance(b, c));
  }
}

TEST(TreeEdit, ArrayReads) {
  std::vector<lang::Variable> vs{{"s", lang::Type{Scalar::Char, true, 6}, 0, true, 1},
                                 {"i", lang::Type::scalar_of(Scalar::Int), 1, true, 1}};
  auto e = [&](const char* src) { return lang::parse_expression(src, vs); };
  EXPECT_EQ(tree_edit_distance(*e("s[i] == '\\0'"), *e("s[i + 1] == '\\0'")), 2u);
  EXPECT_EQ(tree_edit_distance(*e("s[i] == '\\0'"), *e("s[i + 1] <= '\\0'")), 3u);
  EXPECT_EQ(tree_edit_distance(*e("s[i]"), *e("s[i + 1]")), 2u);
  EXPECT_EQ(tree_edit_distance(*e("i + 1"), *e("i - 1")), 1u);
  auto t = to_tree(*e("s[i + 1]"));
  EXPECT_EQ(t.labels.front(), "s[]");
  EXPECT_EQ(t.size(), 4u);
}

namespace {

lang::ExprPtr ex(const char* src) {
  static const std::vector<lang::Variable> vs{{"a", lang::Type::scalar_of(Scalar::Int), 0, true, 1},
                                              {"b", lang::Type::scalar_of(Scalar::Int), 1, true, 1},
                                              {"c", lang::Type::scalar_of(Scalar::Int), 2, true, 1},
                                              {"p", lang::Type::scalar_of(Scalar::Bool), 3, true, 1}};
  return lang::parse_expression(src, vs);
}

}  // namespace

TEST(Scoring, ReplaceTakesTheLargerOfBothSides) {
  EditResult m{ex("a + b"), 1, 0};
  auto h = gen_hint(ex("a - b"), m, 0.43, 0.0, true);
  EXPECT_EQ(h.kind, HintKind::Replace);
  EXPECT_EQ(h.score, 1.0);
  auto h2 = gen_hint(ex("a - b"), m, 0.43, 0.9, true);
  EXPECT_EQ(h2.score, 0.43);
}

TEST(Scoring, InsertRemoveAndCompound) {
  EditResult far{ex("a"), 5, 1};
  auto ins = gen_hint(ex("a * b - c * a"), far, 0.62, 0.3, false);
  EXPECT_EQ(ins.kind, HintKind::Insert);
  EXPECT_EQ(ins.score, 0.62);
  auto none = gen_hint(ex("p"), EditResult{}, 0.62, 0.0, false);
  EXPECT_EQ(none.kind, HintKind::Insert);
  auto rem = remove_hint(ex("c"), 0.38, 2);
  EXPECT_EQ(rem.kind, HintKind::Remove);
  EXPECT_EQ(rem.score, 0.62);
  auto c = make_compound({ins, rem, gen_hint(ex("a - b"), EditResult{ex("a + b"), 1, 0}, 0.43, 0.0, true)});
  EXPECT_EQ(c.kind, HintKind::Compound);
  EXPECT_EQ(c.score, 1.0);
  auto c2 = make_compound({ins, remove_hint(ex("c"), 0.7, 2)});
  EXPECT_EQ(c2.score, std::max(0.62, 1.0 - 0.7));
}

TEST(Scoring, RetainAtDistanceZero) {
  auto r = gen_hint(ex("a"), EditResult{ex("a"), 0, 1}, 0.8, 0.8, false);
  EXPECT_EQ(r.kind, HintKind::Retain);
  EXPECT_EQ(r.score, 0.8);
  auto rs = gen_hint(ex("a + b"), EditResult{ex("a + b"), 0, 0}, 0.8, 0.8, true);
  EXPECT_EQ(rs.kind, HintKind::RetainStatement);
  EXPECT_EQ(rs.text(), "Retain the statement");
}

TEST(MinEdit, NearestThenSmallestOfSameType) {
  std::vector<lang::ExprPtr> S{ex("a + b + c"), ex("a + b"), ex("a"), ex("b"), ex("c")};
  auto m = min_edit(*ex("a - b"), S);
  ASSERT_TRUE(m.match);
  EXPECT_EQ(lang::to_string(*m.match), "a + b");
  EXPECT_EQ(m.dist, 1u);
  auto leaf = min_edit(*ex("1"), S);
  EXPECT_EQ(lang::to_string(*leaf.match), "a");
  EXPECT_EQ(leaf.dist, 1u);
  // No boolean in S: nothing to match.
  EXPECT_FALSE(min_edit(*ex("a == 0"), S).match);
}

TEST(HintText, Forms) {
  Hint r = gen_hint(ex("a - b"), EditResult{ex("a + b"), 1, 0}, 0.9, 0.1, true);
  EXPECT_EQ(r.text(), "Replace a + b with a - b");
  r.component = lang::Component::ForCond;
  EXPECT_EQ(r.text(), "[cond] Replace a + b with a - b");
  Hint rem = remove_hint(ex("c"), 0.1, 3);
  rem.occurrence = 2;
  EXPECT_EQ(rem.text(), "Remove c (occurrence 2)");
  auto c = make_compound({gen_hint(ex("a"), EditResult{ex("a"), 0, 1}, 0.9, 0.9, false), remove_hint(ex("c"), 0.1, 3)});
  EXPECT_EQ(c.text(), "Retain a and Remove c");
  EXPECT_EQ(to_json(c)["constituents"].size(), 2u);
}

namespace {

// A hand-built analysis context over variables a, b, c (Int) and p (Bool).
struct Scenario {
  lang::NormalizedTarget target;
  repair::RepairSpace space;
  repair::Dataset data;
  std::unique_ptr<stats::LikelihoodTable> table;
  std::unique_ptr<HintContext> ctx;

  Scenario(const char* rhs, std::vector<const char*> extra, const std::vector<std::array<std::int64_t, 4>>& rows,
           const std::function<std::int64_t(const std::array<std::int64_t, 4>&)>& x) {
    target.line = 10;
    target.lhs = "y";
    target.rhs = ex(rhs);
    space.rhs = target.rhs;
    for (const auto& s : lang::subexps(target.rhs)) space.candidates.push_back({s, true, false, space.candidates.size()});
    for (auto e : extra) space.candidates.push_back({ex(e), false, true, space.candidates.size()});
    data.rows = rows.size();
    for (const auto& r : rows) data.x.push_back(x(r));
    for (std::size_t c = 0; c < space.candidates.size(); ++c) {
      std::vector<std::int64_t> col;
      bool ok = true;
      for (const auto& r : rows) {
        std::vector<exec::Value> frame;
        for (int k = 0; k < 4; ++k) frame.push_back(exec::Value::of(k == 3 ? Scalar::Bool : Scalar::Int, r[static_cast<std::size_t>(k)]));
        try {
          col.push_back(exec::eval_expr(*space.candidates[c].expr, [&](int s) -> const exec::Value& { return frame[static_cast<std::size_t>(s)]; }));
        } catch (const exec::RuntimeFault&) {
          ok = false;
          break;
        }
      }
      data.column_of.push_back(ok ? static_cast<int>(data.columns.size()) : -1);
      if (ok) {
        data.columns.push_back(std::move(col));
        data.candidate.push_back(c);
      }
    }
    table = std::make_unique<stats::LikelihoodTable>(data);
    ctx = std::make_unique<HintContext>(target, space, data, *table);
  }
};

std::vector<std::array<std::int64_t, 4>> random_rows(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<std::array<std::int64_t, 4>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 41) - 20,
                    static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 2)});
  }
  return rows;
}

std::vector<std::string> texts(const std::vector<Hint>& hs) {
  std::vector<std::string> out;
  for (const auto& h : hs) out.push_back(h.text());
  return out;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST(SimpleHints, ReplaceTheOperator) {
  Scenario s("a + b", {"a - b", "a * b"}, random_rows(60, 1), [](const auto& r) { return r[0] - r[1]; });
  auto hs = rank_hints(mint_simple_hints(*s.ctx, {}));
  ASSERT_FALSE(hs.empty());
  EXPECT_EQ(hs.front().text(), "Replace a + b with a - b");
  EXPECT_NEAR(hs.front().score, 1.0, 1e-12);
  EXPECT_EQ(hs.front().line, 10);
}

TEST(SimpleHints, FalsePositiveGetsOnlyRetainStatement) {
  Scenario s("a + b", {"a - b"}, random_rows(60, 2), [](const auto& r) { return r[0] + r[1]; });
  EXPECT_TRUE(s.ctx->rhs_is_most_likely(0.4));
  auto hs = mint_simple_hints(*s.ctx, {});
  ASSERT_EQ(hs.size(), 1u);
  EXPECT_EQ(hs[0].kind, HintKind::RetainStatement);
  EXPECT_TRUE(mint_compound_hints(*s.ctx, {}).empty());
}

TEST(SimpleHints, AdmissionsRespectThresholds) {
  Scenario s("a + b + c", {"a - b", "a * b", "a - c", "-c"}, random_rows(80, 3),
             [](const auto& r) { return r[0] + r[1]; });
  SynthesisConfig cfg;
  std::vector<Admission> trace;
  auto hs = mint_simple_hints(*s.ctx, cfg, &trace);
  ASSERT_FALSE(trace.empty());
  EXPECT_NEAR(trace.front().likelihood, 1.0, 1e-12);
  // The first admission is unconditional.
  EXPECT_EQ(trace.front().p_likelihood, trace.front().likelihood);
  for (const auto& a : trace) {
    EXPECT_GT(a.likelihood, cfg.delta);
    EXPECT_GE(a.p_likelihood, cfg.beta);
  }
  auto t = texts(hs);
  EXPECT_TRUE(has(t, "Remove c")) << testing::PrintToString(t);
  EXPECT_FALSE(has(t, "Remove a"));
  EXPECT_FALSE(has(t, "Remove b"));
  // The retained subtree is a + b.
  bool retained = false;
  for (const auto& h : hs) {
    if (h.kind == HintKind::Retain && h.text() == "Retain a + b") retained = true;
    for (const auto& c : h.constituents) retained = retained || c.action() == "Retain a + b";
  }
  EXPECT_TRUE(retained);
}

TEST(CompoundHints, RetainAndRemoveCoverTheRhs) {
  Scenario s("a + b + c", {"a - b", "a * b", "a - c"}, random_rows(80, 4), [](const auto& r) { return r[0] + r[1]; });
  auto cs = mint_compound_hints(*s.ctx, {});
  ASSERT_FALSE(cs.empty());
  EXPECT_EQ(cs.front().text(), "Retain a + b and Remove c");
  EXPECT_NEAR(cs.front().score, 1.0, 1e-12);
}

TEST(CompoundHints, ConflictFreeAndComplete) {
  const char* rhs = "a * b + c - a";
  std::vector<const char*> extra{"a - c", "b * c", "a + c", "a * c", "b - a", "c * c", "a + b"};
  for (std::uint32_t seed = 0; seed < 20; ++seed) {
    std::function<std::int64_t(const std::array<std::int64_t, 4>&)> xs[] = {
        [](const auto& r) { return r[0] * r[1] + r[2]; }, [](const auto& r) { return r[0] * r[2] - r[0]; },
        [](const auto& r) { return r[1] * r[2] + r[0]; }};
    Scenario s(rhs, extra, random_rows(50, seed), xs[seed % 3]);
    auto occ = lang::occurrences(s.target.rhs);
    for (const auto& h : mint_compound_hints(*s.ctx, {})) {
      std::vector<const Hint*> parts;
      if (h.kind == HintKind::Compound) {
        for (const auto& c : h.constituents) parts.push_back(&c);
      } else {
        parts.push_back(&h);
      }
      double mx = 0;
      for (auto* p : parts) mx = std::max(mx, p->score);
      EXPECT_EQ(h.score, mx);
      // Non-insert actions touch pairwise disjoint subtrees.
      std::vector<int> acted;
      for (auto* p : parts) {
        if (p->kind == HintKind::Insert) continue;
        ASSERT_GE(p->position, 0);
        for (int q : acted) EXPECT_FALSE(occ[static_cast<std::size_t>(q)].overlaps(occ[static_cast<std::size_t>(p->position)])) << h.text();
        acted.push_back(p->position);
      }
      // Every node of the RHS lies inside or above an acted-on subtree.
      for (std::size_t node = 0; node < occ.size(); ++node) {
        bool covered = false;
        for (int q : acted) covered = covered || occ[static_cast<std::size_t>(q)].overlaps(occ[node]);
        EXPECT_TRUE(covered) << h.text() << " node " << node;
      }
    }
  }
}

TEST(Rank, DeduplicatesAndOrders) {
  auto mk = [](int line, HintKind kind, double score, const char* e) {
    Hint h;
    h.line = line;
    h.kind = kind;
    h.score = score;
    h.support = score;
    h.expr = ex(e);
    if (kind == HintKind::Replace) h.replaced = ex("a");
    return h;
  };
  std::vector<Hint> hs{mk(3, HintKind::Insert, 0.5, "b"), mk(2, HintKind::Remove, 0.9, "c"),
                       mk(3, HintKind::Insert, 0.7, "b"), mk(1, HintKind::Replace, 0.9, "b"),
                       mk(4, HintKind::Insert, 1.0, "c")};
  auto r = rank_hints(hs);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[0].line, 4);
  EXPECT_EQ(r[1].kind, HintKind::Replace);
  EXPECT_EQ(r[2].kind, HintKind::Remove);
  EXPECT_EQ(r[3].score, 0.7);
  for (std::size_t i = 1; i < r.size(); ++i) EXPECT_GE(r[i - 1].score, r[i].score);
}
