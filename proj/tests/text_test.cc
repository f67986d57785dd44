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
#include "pgqlab/text.h"
#include "test_util.h"

namespace pgqlab {
namespace {

using testing::ThrowsCode;

TEST(TextTest, ValuesAndKeys) {
  EXPECT_EQ(Value(42).ToString(), "42");
  EXPECT_EQ(Value(-3).ToString(), "-3");
  EXPECT_EQ(Value("a\"b").ToString(), "\"a\\\"b\"");
  EXPECT_EQ(KeyToText("amount"), "amount");
  EXPECT_EQ(KeyToText("two words"), "\"two words\"");
  EXPECT_EQ(KeyToText(7), "7");
}

TEST(TextTest, OddKeysRoundTrip) {
  for (const char* text :
       {"((x) -[e]-> (y))<\"my label\"(x) & x.\"a b\" = y.3>",
        "(x)<!(!A(x))>", "((x) | (x)){0,3}"}) {
    PatternPtr p = ParsePattern(text);
    EXPECT_TRUE(PatternEquals(*p, *ParsePattern(ToText(*p)))) << text;
  }
}

TEST(TextTest, KeywordsAreReserved) {
  EXPECT_TRUE(
      ThrowsCode([] { ParseQuery("REL R UNION"); }, ErrorCode::kSyntaxError));
  EXPECT_TRUE(ThrowsCode([] { ParseQuery("PI[0](REL R)"); },
                         ErrorCode::kSyntaxError));
  EXPECT_TRUE(ThrowsCode([] { ParseFormula("R(x,"); },
                         ErrorCode::kSyntaxError));
  EXPECT_TRUE(ThrowsCode([] { ParseSelCond("$1 = 2"); },
                         ErrorCode::kSyntaxError));
}

TEST(TextTest, PrecedenceSurvivesPrinting) {
  QueryPtr q = ParseQuery("(REL A UNION REL B) X REL C");
  EXPECT_EQ(ToText(*ParseQuery(ToText(*q))), ToText(*q));
  FormulaPtr f = ParseFormula("(R(x) | S(x)) & !T(x)");
  EXPECT_EQ(ToText(*ParseFormula(ToText(*f))), ToText(*f));
  EXPECT_NE(ToText(*f), ToText(*ParseFormula("R(x) | S(x) & !T(x)")));
}

TEST(TextPropertyTest, PatternsRoundTrip) {
  harness::PatternParams pp;
  pp.max_depth = 5;
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    harness::Rng rng(seed);
    PatternPtr p = harness::GenPattern(rng, pp);
    std::string text = ToText(*p);
    PatternPtr back = ParsePattern(text);
    EXPECT_TRUE(PatternEquals(*p, *back)) << text;
    EXPECT_EQ(ToText(*back), text);
  }
}

TEST(TextPropertyTest, QueriesRoundTrip) {
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    harness::Rng rng(seed);
    auto kind = static_cast<FragmentClass::Kind>(seed % 3);
    harness::PgqCase c = harness::GenPgqCase(rng, kind);
    std::string text = ToText(*c.query);
    QueryPtr back = ParseQuery(text);
    EXPECT_EQ(ToText(*back), text);
    EXPECT_EQ(EvalQuery(c.db, *back), EvalQuery(c.db, *c.query)) << text;
  }
}

TEST(TextPropertyTest, FormulasRoundTrip) {
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    harness::Rng rng(seed);
    harness::FotcCase c = harness::GenFotcCase(rng);
    std::string text = ToText(*c.formula);
    FormulaPtr back = ParseFormula(text);
    EXPECT_EQ(ToText(*back), text);
    EXPECT_EQ(EvalFormulaRel(c.db, *back, c.order),
              EvalFormulaRel(c.db, *c.formula, c.order))
        << text;
  }
}

}  // namespace
}  // namespace pgqlab
