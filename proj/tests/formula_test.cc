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
#include "pgqlab/harness/generators.h"
#include "pgqlab/harness/oracles.h"
#include "pgqlab/text.h"
#include "test_util.h"

namespace pgqlab {
namespace {

using testing::ThrowsCode;

Database Chain() {
  Database db;
  db.Put("R", MakeRelation(2, {{1, 2}, {2, 3}, {3, 4}}));
  db.Put("U", MakeRelation(1, {{1}}));
  return db;
}

Relation Rel(const Database& db, const char* text,
             std::vector<std::string> order) {
  return EvalFormulaRel(db, *ParseFormula(text), order);
}

TEST(FreeVarsTest, Examples) {
  EXPECT_EQ(FreeVars(*ParseFormula("R(x, y) & E y. U(y)")),
            (std::set<std::string>{"x", "y"}));
  EXPECT_EQ(FreeVars(*ParseFormula("A y. R(x, y)")),
            (std::set<std::string>{"x"}));
  EXPECT_EQ(FreeVars(*ParseFormula("TC[u; v](R(u, v) & U(p))(x; y)")),
            (std::set<std::string>{"x", "y", "p"}));
  EXPECT_EQ(FreeVarsOrdered(*ParseFormula("R(y, x) & x = 3")),
            (std::vector<std::string>{"y", "x"}));
}

TEST(TcArityTest, Examples) {
  EXPECT_EQ(TcArity(*ParseFormula("R(x, y)")), 0u);
  EXPECT_EQ(TcArity(*ParseFormula("TC[u; v](R(u, v))(x; y)")), 1u);
  EXPECT_EQ(TcArity(*ParseFormula(
                "TC[a, b; c, d](R(a, c) & R(b, d))(x, y; z, w)")),
            2u);
  EXPECT_TRUE(ThrowsCode(
      [] { MakeTC({"u"}, {"u"}, MakeAtom("R", {"u", "u"}), {"x"}, {"y"}); },
      ErrorCode::kStaticError));
  EXPECT_TRUE(ThrowsCode(
      [] { MakeTC({"u"}, {"v"}, MakeAtom("R", {"u", "v"}), {"x", "z"}, {"y"}); },
      ErrorCode::kStaticError));
}

TEST(EvalFormulaTest, Pointwise) {
  Database db = Chain();
  EXPECT_TRUE(EvalFormula(db, *ParseFormula("R(x, y)"), {{"x", 1}, {"y", 2}}));
  EXPECT_FALSE(EvalFormula(db, *ParseFormula("R(x, y)"), {{"x", 2}, {"y", 1}}));
  EXPECT_TRUE(EvalFormula(db, *ParseFormula("E z. R(x, z) & R(z, y)"),
                          {{"x", 1}, {"y", 3}}));
  EXPECT_TRUE(EvalFormula(db, *ParseFormula("TC[u; v](R(u, v))(x; y)"),
                          {{"x", 1}, {"y", 4}}));
  EXPECT_FALSE(EvalFormula(db, *ParseFormula("TC[u; v](R(u, v))(x; y)"),
                           {{"x", 4}, {"y", 1}}));
  // Reflexive on any value, even outside the active domain.
  EXPECT_TRUE(EvalFormula(db, *ParseFormula("TC[u; v](R(u, v))(x; y)"),
                          {{"x", 99}, {"y", 99}}));
  EXPECT_TRUE(ThrowsCode(
      [&] { EvalFormula(db, *ParseFormula("U(x)"), {}); },
      ErrorCode::kUnboundVariable));
}

TEST(EvalFormulaRelTest, Examples) {
  Database db = Chain();
  EXPECT_EQ(Rel(db, "TC[u; v](R(u, v))(x; y) & U(x)", {"x", "y"}),
            MakeRelation(2, {{1, 1}, {1, 2}, {1, 3}, {1, 4}}));
  EXPECT_EQ(Rel(db, "A y. (!R(x, y) | U(x) | y = 4)", {"x"}),
            MakeRelation(1, {{1}, {3}, {4}}));
  EXPECT_EQ(Rel(db, "R(x, y)", {"y", "x"}),
            MakeRelation(2, {{2, 1}, {3, 2}, {4, 3}}));
  // Constants join the domain.
  EXPECT_EQ(Rel(db, "x = 9", {"x"}), MakeRelation(1, {{9}}));
  EXPECT_EQ(Rel(db, "E x. U(x)", {}), TrueRelation());
  EXPECT_TRUE(ThrowsCode([&] { Rel(db, "R(x, y)", {"x"}); },
                         ErrorCode::kVarOrderMismatch));
  EXPECT_TRUE(ThrowsCode([&] { Rel(db, "R(x, y)", {"x", "z"}); },
                         ErrorCode::kVarOrderMismatch));
}

TEST(EvalFormulaRelTest, ParameterizedTc) {
  Database db;
  db.Put("G", MakeRelation(3, {{1, 2, "a"}, {2, 3, "b"}, {2, 3, "a"}}));
  Relation r = Rel(db, "TC[u; v](G(u, v, p))(x; y) & x = 1 & p = \"a\"",
                   {"x", "y", "p"});
  EXPECT_EQ(r, MakeRelation(3, {{1, 1, "a"}, {1, 2, "a"}, {1, 3, "a"}}));
  Relation b = Rel(db, "TC[u; v](G(u, v, p))(x; y) & x = 1 & p = \"b\"",
                   {"x", "y", "p"});
  EXPECT_EQ(b, MakeRelation(3, {{1, 1, "b"}}));
}

TEST(FormulaPropertyTest, Dualities) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    harness::Rng rng(seed);
    harness::FotcCase c = harness::GenFotcCase(rng);
    std::set<std::string> fv = FreeVars(*c.formula);
    std::string v = "q";
    FormulaPtr f = c.formula;
    if (!fv.empty()) v = *fv.begin();
    FormulaPtr ex = MakeExists(v, f);
    FormulaPtr fa = MakeFNot(MakeForall(v, MakeFNot(f)));
    std::vector<std::string> order = FreeVarsOrdered(*ex);
    EXPECT_EQ(EvalFormulaRel(c.db, *ex, order),
              EvalFormulaRel(c.db, *fa, order))
        << ToText(*f);
    FormulaPtr dn = MakeFNot(MakeFNot(f));
    EXPECT_EQ(EvalFormulaRel(c.db, *dn, c.order),
              EvalFormulaRel(c.db, *f, c.order));
  }
}

TEST(FormulaPropertyTest, MatchesEnumeration) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    harness::Rng rng(seed);
    harness::FotcCase c = harness::GenFotcCase(rng);
    EXPECT_EQ(EvalFormulaRel(c.db, *c.formula, c.order),
              harness::EnumerateFormulaRel(c.db, *c.formula, c.order))
        << ToText(*c.formula);
  }
}

TEST(FormulaPropertyTest, TcIsReflexiveAndTransitive) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    harness::Rng rng(seed);
    Database db;
    db.Put("R", testing::RandomRelation(rng, 2, 8, 4));
    FormulaPtr tc = ParseFormula("TC[u; v](R(u, v))(x; y)");
    Relation r = EvalFormulaRel(db, *tc, {"x", "y"});
    for (int a = 1; a <= 4; ++a) {
      if (ActiveDomain(db).count(a)) EXPECT_TRUE(r.contains({a, a}));
    }
    for (const auto& ab : r.rows()) {
      for (const auto& bc : r.rows()) {
        if (ab[1] == bc[0]) EXPECT_TRUE(r.contains({ab[0], bc[1]}));
      }
    }
    for (const auto& row : db.Get("R").rows()) EXPECT_TRUE(r.contains(row));
  }
}

TEST(FormulaPropertyTest, TcIsMonotone) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    harness::Rng rng(seed);
    Relation small = testing::RandomRelation(rng, 2, 6, 4);
    Relation big = Union(small, testing::RandomRelation(rng, 2, 4, 4));
    Database a, b;
    a.Put("R", small);
    b.Put("R", big);
    a.Put("D", MakeRelation(1, {{1}, {2}, {3}, {4}}));
    b.Put("D", MakeRelation(1, {{1}, {2}, {3}, {4}}));
    FormulaPtr tc = ParseFormula("TC[u; v](R(u, v))(x; y)");
    Relation ra = EvalFormulaRel(a, *tc, {"x", "y"});
    Relation rb = EvalFormulaRel(b, *tc, {"x", "y"});
    for (const auto& row : ra.rows()) EXPECT_TRUE(rb.contains(row));
  }
}

}  // namespace
}  // namespace pgqlab
