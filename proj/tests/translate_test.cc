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

#include "pgqlab/formula.h"
#include "pgqlab/harness/fixtures.h"
#include "pgqlab/harness/generators.h"
#include "pgqlab/query.h"
#include "pgqlab/text.h"
#include "pgqlab/translate.h"
#include "test_util.h"

namespace pgqlab {
namespace {

using testing::ThrowsCode;

constexpr TcStrategy kBoth[] = {TcStrategy::kParamIterate,
                                TcStrategy::kParamEmbed};

Database Chain() {
  Database db;
  db.Put("R", MakeRelation(2, {{1, 2}, {2, 3}, {3, 4}}));
  db.Put("U", MakeRelation(1, {{1}}));
  return db;
}

Relation ViaFotc(const Database& db, const Query& q) {
  ColumnFormula cf = PgqToFotc(q, db.Schema());
  return EvalFormulaRel(db, *cf.formula, cf.vars);
}

TEST(FreshNamerTest, NeverRepeats) {
  FreshNamer n;
  n.Reserve(std::set<std::string>{"v0", "v1"});
  std::set<std::string> seen = {"v0", "v1"};
  for (const auto& v : n.FreshList(50)) EXPECT_TRUE(seen.insert(v).second);
}

TEST(PgqToFotcTest, Algebra) {
  Database db = Chain();
  for (const char* q : {"REL R", "PI[2,1](REL R)", "SIGMA[$1=$2](REL R X REL U)",
                        "REL R MINUS PI[1,1](REL U)", "CONST 7 X REL U",
                        "PI[](REL R)", "TCLOOP[1,0](REL R)"}) {
    QueryPtr p = ParseQuery(q);
    EXPECT_EQ(ViaFotc(db, *p), EvalQuery(db, *p)) << q;
  }
}

TEST(PgqToFotcTest, Fixtures) {
  Database t = harness::TransfersDb();
  QueryPtr tq = ParseQuery(harness::TransfersQueryText());
  EXPECT_EQ(ViaFotc(t, *tq), EvalQuery(t, *tq));
  Database c = harness::ColoredDb();
  QueryPtr cq = ParseQuery(harness::AlternatingQueryText());
  EXPECT_EQ(ViaFotc(c, *cq), EvalQuery(c, *cq));
  Database w = harness::WeightedDb();
  QueryPtr wq = ParseQuery(harness::CompositeQueryText());
  EXPECT_EQ(ViaFotc(w, *wq), EvalQuery(w, *wq));
}

TEST(PgqToFotcTest, ColumnVarsAreDistinctAndFree) {
  Database db = harness::TransfersDb();
  ColumnFormula cf =
      PgqToFotc(*ParseQuery(harness::TransfersQueryText()), db.Schema());
  std::set<std::string> cols(cf.vars.begin(), cf.vars.end());
  EXPECT_EQ(cols.size(), cf.vars.size());
  EXPECT_EQ(cols, FreeVars(*cf.formula));
  EXPECT_GE(TcArity(*cf.formula), 1u);
}

TEST(FotcToPgqTest, Reachability) {
  Database db = Chain();
  FormulaPtr f = ParseFormula("TC[u; v](R(u, v))(x; y) & U(x)");
  Relation want = MakeRelation(2, {{1, 1}, {1, 2}, {1, 3}, {1, 4}});
  for (TcStrategy s : kBoth) {
    QueryPtr q = FotcToPgq(*f, {"x", "y"}, s, db.Schema());
    EXPECT_EQ(EvalQuery(db, *q), want) << TcStrategyName(s);
    // The printed query reads back to the same result.
    EXPECT_EQ(EvalQuery(db, *ParseQuery(ToText(*q))), want);
  }
}

TEST(FotcToPgqTest, IdentifierArity) {
  Database db;
  db.Put("G", MakeRelation(3, {{1, 2, 1}}));
  db.Put("H", MakeRelation(4, {{1, 1, 2, 2}}));
  Schema s = db.Schema();
  FormulaPtr one = ParseFormula("TC[u; v](G(u, v, p))(x; y)");
  EXPECT_EQ(MaxIdentArity(*FotcToPgq(*one, {"x", "y", "p"},
                                     TcStrategy::kParamIterate, s),
                          s),
            1u);
  EXPECT_EQ(MaxIdentArity(*FotcToPgq(*one, {"x", "y", "p"},
                                     TcStrategy::kParamEmbed, s),
                          s),
            3u);
  FormulaPtr two = ParseFormula("TC[a, b; c, d](H(a, b, c, d))(x, y; z, w)");
  EXPECT_EQ(MaxIdentArity(*FotcToPgq(*two, {"x", "y", "z", "w"},
                                     TcStrategy::kParamIterate, s),
                          s),
            2u);
  EXPECT_EQ(MaxIdentArity(*FotcToPgq(*two, {"x", "y", "z", "w"},
                                     TcStrategy::kParamEmbed, s),
                          s),
            4u);
  FormulaPtr plain = ParseFormula("E y. R(x, y)");
  Database c = Chain();
  EXPECT_EQ(MaxIdentArity(*FotcToPgq(*plain, {"x"}, TcStrategy::kParamEmbed,
                                     c.Schema()),
                          c.Schema()),
            0u);
}

TEST(FotcToPgqTest, Errors) {
  Database db = Chain();
  FormulaPtr f = ParseFormula("R(x, y)");
  EXPECT_TRUE(ThrowsCode(
      [&] { FotcToPgq(*f, {"x"}, TcStrategy::kParamIterate, db.Schema()); },
      ErrorCode::kUnboundVariable));
  EXPECT_TRUE(ThrowsCode(
      [&] {
        FotcToPgq(*f, {"x", "y", "x"}, TcStrategy::kParamIterate, db.Schema());
      },
      ErrorCode::kVarOrderMismatch));
  EXPECT_TRUE(ThrowsCode(
      [&] {
        FotcToPgq(*ParseFormula("Q(x)"), {"x"}, TcStrategy::kParamIterate,
                  db.Schema());
      },
      ErrorCode::kUnknownRelation));
}

TEST(TcClauseToPgqTest, DiagonalCoversDomain) {
  Database db = Chain();
  for (TcStrategy s : kBoth) {
    QueryPtr q = TcClauseToPgq(MakeRel("R"), 1, 0, s, db.Schema(), {9});
    Relation r = EvalQuery(db, *q);
    EXPECT_TRUE(r.contains({9, 9}));
    EXPECT_TRUE(r.contains({1, 4}));
    EXPECT_FALSE(r.contains({4, 1}));
    EXPECT_EQ(r.size(), 6u + 5u);  // 6 strict pairs, 5 diagonal
  }
}

TEST(AlignColumnsTest, Permutes) {
  Database db = Chain();
  QueryPtr q = AlignColumns(MakeRel("R"), {"a", "b"}, {"b", "a"});
  EXPECT_EQ(EvalQuery(db, *q), MakeRelation(2, {{2, 1}, {3, 2}, {4, 3}}));
  EXPECT_TRUE(ThrowsCode(
      [&] { AlignColumns(MakeRel("R"), {"a", "b"}, {"a", "c"}); },
      ErrorCode::kOrderMismatch));
}

TEST(ActiveDomainQueryTest, Values) {
  Database db = Chain();
  QueryPtr q = ActiveDomainQuery(db.Schema(), {7});
  EXPECT_EQ(EvalQuery(db, *q), MakeRelation(1, {{1}, {2}, {3}, {4}, {7}}));
}

TEST(TranslatePropertyTest, FormulaRoundTrip) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    harness::Rng rng(seed);
    harness::FotcCase c = harness::GenFotcCase(rng);
    Relation want = EvalFormulaRel(c.db, *c.formula, c.order);
    for (TcStrategy s : kBoth) {
      QueryPtr q = FotcToPgq(*c.formula, c.order, s, c.db.Schema());
      EXPECT_EQ(EvalQuery(c.db, *q), want) << ToText(*c.formula);
      EXPECT_EQ(ViaFotc(c.db, *q), want) << ToText(*c.formula);
    }
  }
}

TEST(TranslatePropertyTest, QueryRoundTrip) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    harness::Rng rng(seed);
    auto kind = static_cast<FragmentClass::Kind>(seed % 3);
    harness::PgqCase c = harness::GenPgqCase(rng, kind);
    EXPECT_EQ(ViaFotc(c.db, *c.query), EvalQuery(c.db, *c.query))
        << ToText(*c.query);
  }
}

}  // namespace
}  // namespace pgqlab
