// Copyright 2026 The pgqlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "pgqlab/harness/generators.h"
#include "pgqlab/harness/oracles.h"
#include "pgqlab/pattern_eval.h"
#include "pgqlab/text.h"
#include "test_util.h"

namespace pgqlab {
namespace {

using testing::EdgeSpec;
using testing::Id;
using testing::SmallGraph;
using testing::ThrowsCode;

// 1 -a-> 2 -b-> 3 -c-> 1, plus d: 3 -> 4. Node 1 is A, 2 is B.
PropertyGraph Cycle() {
  return SmallGraph({1, 2, 3, 4},
                    {{"a", 1, 2}, {"b", 2, 3}, {"c", 3, 1}, {"d", 3, 4}},
                    {{1, "A"}, {2, "B"}, {"a", "A"}},
                    {{1, "k", 5}, {2, "k", 5}, {3, "k", 6}, {"a", "w", 1}});
}

std::set<std::pair<Value, Value>> Endpoints(const std::set<MatchTriple>& s) {
  std::set<std::pair<Value, Value>> out;
  for (const auto& m : s) out.insert({m.src[0], m.tgt[0]});
  return out;
}

std::set<MatchTriple> Eval(const PropertyGraph& g, const char* text,
                           const EvalOptions& opts = {}) {
  return EvalPattern(g, *ParsePattern(text), opts);
}

TEST(EvalPatternTest, NodeAtom) {
  auto s = Eval(Cycle(), "(x)");
  EXPECT_EQ(s.size(), 4u);
  for (const auto& m : s) {
    EXPECT_EQ(m.src, m.tgt);
    EXPECT_EQ(m.mu.at("x"), m.src);
  }
  EXPECT_EQ(Eval(Cycle(), "()").size(), 4u);
}

TEST(EvalPatternTest, EdgeAtoms) {
  auto fwd = Eval(Cycle(), "-[e]->");
  EXPECT_EQ(fwd.count(MatchTriple{Id(1), Id(2), {{"e", Id("a")}}}), 1u);
  EXPECT_EQ(fwd.size(), 4u);
  auto bwd = Eval(Cycle(), "<-[e]-");
  EXPECT_EQ(bwd.count(MatchTriple{Id(2), Id(1), {{"e", Id("a")}}}), 1u);
  EXPECT_EQ(bwd.size(), 4u);
}

TEST(EvalPatternTest, ConcatJoinsOnSharedVariables) {
  EXPECT_EQ(Endpoints(Eval(Cycle(), "(x) -[]-> (y) -[]-> (z)")),
            (std::set<std::pair<Value, Value>>{{1, 3}, {2, 1}, {2, 4}, {3, 2}}));
  // The same variable at both ends asks for a cycle of length 3.
  EXPECT_EQ(Endpoints(Eval(Cycle(), "(x) -[]-> () -[]-> () -[]-> (x)")),
            (std::set<std::pair<Value, Value>>{{1, 1}, {2, 2}, {3, 3}}));
}

TEST(EvalPatternTest, Repetition) {
  auto star = Endpoints(Eval(Cycle(), "(-[]->)*"));
  EXPECT_EQ(star.size(), 13u);  // 1,2,3 reach 1..4; 4 reaches itself
  auto plus = Endpoints(Eval(Cycle(), "-[]->{1,*}"));
  EXPECT_FALSE(plus.count({4, 4}));
  EXPECT_TRUE(plus.count({1, 1}));
  auto two = Endpoints(Eval(Cycle(), "-[]->{2}"));
  EXPECT_EQ(two, (std::set<std::pair<Value, Value>>{
                     {1, 3}, {2, 1}, {2, 4}, {3, 2}}));
  auto zero = Eval(Cycle(), "-[e]->{0}");
  EXPECT_EQ(zero.size(), 4u);
  for (const auto& m : zero) EXPECT_TRUE(m.mu.empty());
}

TEST(EvalPatternTest, FiltersAndAlternation) {
  auto s = Eval(Cycle(), "((x) -[e]-> (y))<A(x) & x.k = y.k>");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.begin()->mu.at("e"), Id("a"));
  auto alt = Endpoints(Eval(Cycle(), "(x) -[]-> (y) | (x) <-[]- (y)"));
  EXPECT_EQ(alt.size(), 8u);
  EXPECT_TRUE(Eval(Cycle(), "((x) -[e]-> (y))<e.w = x.k>").empty());
}

TEST(EvalConditionTest, Basics) {
  PropertyGraph g = Cycle();
  Binding mu = {{"x", Id(1)}, {"y", Id(2)}, {"z", Id(4)}};
  EXPECT_TRUE(EvalCondition(g, mu, *ParseCondition("A(x)")));
  EXPECT_FALSE(EvalCondition(g, mu, *ParseCondition("A(y)")));
  EXPECT_TRUE(EvalCondition(g, mu, *ParseCondition("x.k = y.k")));
  // Undefined properties make equality false, and its negation true.
  EXPECT_FALSE(EvalCondition(g, mu, *ParseCondition("z.k = z.k")));
  EXPECT_TRUE(EvalCondition(g, mu, *ParseCondition("!(z.k = z.k)")));
  EXPECT_TRUE(EvalCondition(g, mu, *ParseCondition("B(x) | B(y)")));
  EXPECT_TRUE(ThrowsCode(
      [&] { EvalCondition(g, mu, *ParseCondition("A(w)")); },
      ErrorCode::kUnboundVariable));
}

TEST(EvalOutputTest, ColumnsAndProperties) {
  PropertyGraph g = Cycle();
  Relation r = EvalOutput(g, ParseOutputPattern("(x) -[e]-> (y) OUTPUT(x, y.k)"));
  EXPECT_EQ(r.arity(), 2u);
  // Edge d ends at 4, which has no k, so its row is dropped.
  EXPECT_EQ(r, MakeRelation(2, {{1, 5}, {2, 6}, {3, 5}}));
  Relation b = EvalOutput(g, ParseOutputPattern("(x)<A(x)> OUTPUT()"));
  EXPECT_EQ(b, TrueRelation());
  EXPECT_EQ(OutputArity(ParseOutputPattern("(x) -[e]-> (y) OUTPUT(x, e.w)"), 3),
            4u);
}

TEST(EvalPatternPathsTest, Paths) {
  PropertyGraph g = Cycle();
  auto paths = EvalPatternPaths(g, *ParsePattern("(x) -[]-> (y)"), 0);
  EXPECT_EQ(paths.size(), 4u);
  for (const auto& p : paths) EXPECT_EQ(p.path.size(), 3u);
  auto bwd = EvalPatternPaths(g, *ParsePattern("<-[e]-"), 0);
  EXPECT_TRUE(bwd.count(PathMatch{{Id(2), Id("a"), Id(1)}, {{"e", Id("a")}}}));
  auto rep = EvalPatternPaths(g, *ParsePattern("-[]->{1,*}"), 3);
  for (const auto& p : rep) EXPECT_LE(p.path.size(), 7u);
  EXPECT_TRUE(ThrowsCode(
      [&] { EvalPatternPaths(g, *ParsePattern("-[]->{0,*}"), 50, 20); },
      ErrorCode::kPathLimit));
}

TEST(EvalPatternPathsTest, SufficientBound) {
  PropertyGraph g = Cycle();
  EXPECT_EQ(SufficientRepBound(g, *ParsePattern("-[]->{2,*}")), 6u);
  PatternPtr p = ParsePattern("(x) -[]->{1,*} (y)");
  EXPECT_EQ(ProjectEndpoints(
                EvalPatternPaths(g, *p, SufficientRepBound(g, *p))),
            EvalPattern(g, *p));
}

TEST(EvalPatternPropertyTest, StarMatchesBruteReach) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    harness::Rng rng(seed);
    PropertyGraph g = harness::GenGraph(rng);
    Relation reach(2 * g.id_arity());
    for (const auto& m : EvalPattern(g, *ParsePattern("(-[]->)*"))) {
      reach.Insert(Concat(m.src, m.tgt));
    }
    EXPECT_EQ(reach, harness::BruteReach(g)) << seed;
  }
}

TEST(EvalPatternPropertyTest, FilterAndAltLaws) {
  harness::PatternParams pp;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    harness::Rng rng(seed);
    PropertyGraph g = harness::GenGraph(rng);
    PatternPtr p = harness::GenPattern(rng, pp);
    auto base = EvalPattern(g, *p);
    // p | p = p
    EXPECT_EQ(EvalPattern(g, *MakeAlt(p, p)), base);
    // A filter keeps a subset.
    std::set<std::string> schema = SchemaOf(*p);
    if (!schema.empty()) {
      auto filtered = EvalPattern(
          g, *MakeFilter(p, MakeHasLabel("A", *schema.begin())));
      for (const auto& m : filtered) EXPECT_TRUE(base.count(m));
      // Filtering by theta and by !theta partitions the result.
      auto neg = EvalPattern(
          g, *MakeFilter(p, MakeCondNot(MakeHasLabel("A", *schema.begin()))));
      EXPECT_EQ(filtered.size() + neg.size(), base.size());
    }
  }
}

TEST(EvalPatternPropertyTest, RepetitionIsMonotoneInUpperBound) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    harness::Rng rng(seed);
    PropertyGraph g = harness::GenGraph(rng);
    PatternPtr body = MakeFwdEdge();
    std::set<MatchTriple> prev;
    for (size_t hi = 0; hi < 4; ++hi) {
      auto cur = EvalPattern(g, *MakeRepeat(body, 0, hi));
      for (const auto& m : prev) EXPECT_TRUE(cur.count(m));
      prev = cur;
    }
    auto star = EvalPattern(g, *MakeStar(body));
    for (const auto& m : prev) EXPECT_TRUE(star.count(m));
  }
}

TEST(EvalFaultTest, FaultsChangeResults) {
  PropertyGraph g = Cycle();
  EvalOptions drop{EvalFault::kDropZeroRepetition};
  EXPECT_NE(Eval(g, "(-[]->)*", drop), Eval(g, "(-[]->)*"));
  EvalOptions skip{EvalFault::kSkipCompatibility};
  EXPECT_NE(Eval(g, "(x) -[]-> (x)", skip), Eval(g, "(x) -[]-> (x)"));
}

}  // namespace
}  // namespace pgqlab
