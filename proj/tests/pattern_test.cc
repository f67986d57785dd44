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
#include "pgqlab/pattern.h"
#include "pgqlab/text.h"
#include "test_util.h"

namespace pgqlab {
namespace {

using testing::ThrowsCode;

std::set<std::string> Vars(std::initializer_list<const char*> v) {
  return std::set<std::string>(v.begin(), v.end());
}

TEST(SchemaOfTest, Atoms) {
  EXPECT_EQ(SchemaOf(*ParsePattern("(x)")), Vars({"x"}));
  EXPECT_EQ(SchemaOf(*ParsePattern("()")), Vars({}));
  EXPECT_EQ(SchemaOf(*ParsePattern("-[e]->")), Vars({"e"}));
  EXPECT_EQ(SchemaOf(*ParsePattern("<-[e]-")), Vars({"e"}));
}

TEST(SchemaOfTest, Composite) {
  EXPECT_EQ(SchemaOf(*ParsePattern("(x) -[e]-> (y)")), Vars({"x", "e", "y"}));
  EXPECT_EQ(SchemaOf(*ParsePattern("((x) -[]-> (y)) | ((y) <-[]- (x))")),
            Vars({"x", "y"}));
  EXPECT_EQ(SchemaOf(*ParsePattern("(x) (-[e]-> (y)){1,*} (z)")),
            Vars({"x", "z"}));
  EXPECT_EQ(SchemaOf(*ParsePattern("((x) -[e]-> (y))<A(x)>")),
            Vars({"x", "e", "y"}));
}

TEST(ValidatePatternTest, AcceptsWellFormed) {
  EXPECT_TRUE(ValidatePattern(*ParsePattern("(x) -[e]-> (y)")).empty());
  EXPECT_TRUE(ValidatePattern(*ParsePattern("(x)(-[]->){0,*}(y)")).empty());
  EXPECT_TRUE(
      ValidatePattern(*ParsePattern("((x) -[]-> (y))<x.k = y.w>")).empty());
}

TEST(ValidatePatternTest, AlternativesNeedEqualSchemas) {
  auto errs = ValidatePattern(*ParsePattern("(x) | (y)"));
  ASSERT_FALSE(errs.empty());
  EXPECT_EQ(errs.front().kind, StaticErrorKind::kSchemaMismatch);
}

TEST(ValidatePatternTest, BadBounds) {
  auto errs = ValidatePattern(*MakeRepeat(MakeFwdEdge(), 3, 1));
  ASSERT_FALSE(errs.empty());
  EXPECT_EQ(errs.front().kind, StaticErrorKind::kBadRepeatBounds);
}

TEST(ValidatePatternTest, ConditionVarsMustBeBound) {
  auto errs = ValidatePattern(*ParsePattern("(x)<A(y)>"));
  ASSERT_FALSE(errs.empty());
  EXPECT_EQ(errs.front().kind, StaticErrorKind::kUnboundVarInCondition);
}

TEST(ValidateOutputPatternTest, Outputs) {
  EXPECT_TRUE(
      ValidateOutputPattern(ParseOutputPattern("(x) -[e]-> (y) OUTPUT(x, e.k)"))
          .empty());
  auto dup = ValidateOutputPattern(ParseOutputPattern("(x) OUTPUT(x, x)"));
  ASSERT_FALSE(dup.empty());
  EXPECT_EQ(dup.front().kind, StaticErrorKind::kDuplicateOutput);
  auto unbound = ValidateOutputPattern(ParseOutputPattern("(x) OUTPUT(y)"));
  ASSERT_FALSE(unbound.empty());
  EXPECT_EQ(unbound.front().kind, StaticErrorKind::kUnboundOutputVar);
  EXPECT_TRUE(ThrowsCode(
      [] { RequireValid(ParseOutputPattern("(x) OUTPUT(y)")); },
      ErrorCode::kStaticError));
}

TEST(ParsePatternTest, Shapes) {
  PatternPtr p = ParsePattern("(x){1,*}");
  const auto* r = std::get_if<Pattern::Repeat>(&p->node);
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->lo, 1u);
  EXPECT_FALSE(r->hi.has_value());

  PatternPtr star = ParsePattern("(-[e]->)*");
  const auto* s = std::get_if<Pattern::Repeat>(&star->node);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->lo, 0u);
  EXPECT_FALSE(s->hi.has_value());

  PatternPtr exact = ParsePattern("-[]->{2}");
  EXPECT_EQ(std::get<Pattern::Repeat>(exact->node).hi, RepeatBound(2));
}

TEST(ParsePatternTest, ConcatBindsTighterThanAlt) {
  PatternPtr p = ParsePattern("(x) -[]-> (y) | (x) <-[]- (y)");
  ASSERT_TRUE(std::holds_alternative<Pattern::Alt>(p->node));
}

TEST(ParsePatternTest, Errors) {
  EXPECT_TRUE(ThrowsCode([] { ParsePattern("(x | y)"); },
                         ErrorCode::kSyntaxError));
  EXPECT_TRUE(ThrowsCode([] { ParsePattern("(x"); }, ErrorCode::kSyntaxError));
  EXPECT_TRUE(ThrowsCode([] { ParsePattern(""); }, ErrorCode::kSyntaxError));
  EXPECT_TRUE(
      ThrowsCode([] { ParsePattern("(x){1,"); }, ErrorCode::kSyntaxError));
  try {
    ParsePattern("(x) )");
    FAIL() << "no error";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(PatternMetricsTest, SizeAndDepth) {
  PatternPtr p = ParsePattern("(x) -[e]-> (y)");
  EXPECT_EQ(PatternSize(*p), 5u);
  EXPECT_EQ(PatternSize(*MakeNode("x")), 1u);
  EXPECT_GE(PatternDepth(*p), 2u);
}

TEST(GenPatternTest, AlwaysValidAndDeterministic) {
  harness::PatternParams pp;
  for (uint64_t seed = 0; seed < 500; ++seed) {
    harness::Rng a(seed), b(seed);
    PatternPtr p = harness::GenPattern(a, pp);
    PatternPtr q = harness::GenPattern(b, pp);
    EXPECT_TRUE(PatternEquals(*p, *q));
    EXPECT_TRUE(ValidatePattern(*p).empty()) << ToText(*p);
    EXPECT_LE(PatternDepth(*p), pp.max_depth) << ToText(*p);
  }
}

}  // namespace
}  // namespace pgqlab
