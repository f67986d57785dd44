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

#include <vector>

#include "pgqlab/harness/fixtures.h"
#include "pgqlab/relation.h"
#include "pgqlab/value.h"
#include "test_util.h"

namespace pgqlab {
namespace {

using testing::RandomRelation;
using testing::ThrowsCode;

TEST(MakeRelationTest, DropsDuplicateRows) {
  Relation r = MakeRelation(1, {{1}, {1}, {2}});
  EXPECT_EQ(r.size(), 2u);
  EXPECT_TRUE(r.contains({1}));
  EXPECT_TRUE(r.contains({2}));
}

TEST(MakeRelationTest, NullaryTrue) {
  Relation r = MakeRelation(0, {{}});
  EXPECT_EQ(r.arity(), 0u);
  EXPECT_EQ(r.size(), 1u);
  EXPECT_EQ(r, TrueRelation());
}

TEST(MakeRelationTest, RejectsWrongRowLength) {
  EXPECT_TRUE(ThrowsCode([] { MakeRelation(2, {{1}, {1, 2}}); },
                         ErrorCode::kArityMismatch));
}

TEST(ActiveDomainTest, Empty) { EXPECT_TRUE(ActiveDomain(Database()).empty()); }

TEST(ActiveDomainTest, MixedValues) {
  Database db;
  db.Put("R", MakeRelation(2, {{1, "a"}}));
  EXPECT_EQ(ActiveDomain(db), (std::set<Value>{1, "a"}));
}

TEST(ActiveDomainTest, BankFixture) {
  Database db = harness::TransfersDb();
  std::set<Value> expect;
  for (const auto& [name, rel] : db.relations()) {
    for (const auto& row : rel.rows()) expect.insert(row.begin(), row.end());
  }
  std::set<Value> adom = ActiveDomain(db);
  EXPECT_EQ(adom, expect);
  EXPECT_TRUE(adom.count("DE03"));
  EXPECT_TRUE(adom.count(150));
}

TEST(ValueCompareTest, IntBeforeStr) {
  EXPECT_EQ(CompareValues(3, "a"), Ordering::kLess);
  EXPECT_EQ(CompareValues(5, 5), Ordering::kEqual);
  EXPECT_EQ(CompareValues("b", "a"), Ordering::kGreater);
  EXPECT_NE(Value(1), Value("1"));
}

TEST(ValueCompareTest, TotalOrderOnSmallDomain) {
  const std::vector<Value> vals = {-2, 0, 1, 7, "", "a", "ab", "b"};
  for (const auto& a : vals) {
    for (const auto& b : vals) {
      Ordering ab = CompareValues(a, b), ba = CompareValues(b, a);
      EXPECT_EQ(ab == Ordering::kEqual, a == b);
      EXPECT_EQ(ab == Ordering::kLess, ba == Ordering::kGreater);
      for (const auto& c : vals) {
        if (ab == Ordering::kLess && CompareValues(b, c) == Ordering::kLess) {
          EXPECT_EQ(CompareValues(a, c), Ordering::kLess);
        }
      }
    }
  }
}

TEST(RaApplyTest, ProjectSwapsColumns) {
  Relation r = MakeRelation(2, {{1, 2}});
  Relation args[] = {r};
  EXPECT_EQ(ApplyRA(ProjectOp{{2, 1}}, args), MakeRelation(2, {{2, 1}}));
}

TEST(RaApplyTest, SelectEquality) {
  Relation r = MakeRelation(2, {{1, 1}, {1, 2}});
  EXPECT_EQ(Select(r, *SelCond::Eq(1, 2)), MakeRelation(2, {{1, 1}}));
}

TEST(RaApplyTest, Product) {
  EXPECT_EQ(Product(MakeRelation(1, {{1}}), MakeRelation(1, {{2}, {3}})),
            MakeRelation(2, {{1, 2}, {1, 3}}));
}

TEST(RaApplyTest, Errors) {
  Relation a = MakeRelation(1, {{1}}), b = MakeRelation(2, {{1, 2}});
  EXPECT_TRUE(ThrowsCode([&] { Union(a, b); }, ErrorCode::kArityMismatch));
  EXPECT_TRUE(
      ThrowsCode([&] { Difference(a, b); }, ErrorCode::kArityMismatch));
  EXPECT_TRUE(
      ThrowsCode([&] { Project(a, {2}); }, ErrorCode::kIndexOutOfRange));
  EXPECT_TRUE(ThrowsCode([&] { Select(a, *SelCond::Eq(1, 3)); },
                         ErrorCode::kIndexOutOfRange));
}

TEST(RaApplyTest, NegatedAndCombinedConditions) {
  Relation r = MakeRelation(3, {{1, 1, 2}, {1, 2, 2}, {3, 4, 5}});
  auto c = SelCond::MakeOr(SelCond::Eq(1, 2), SelCond::Eq(2, 3));
  EXPECT_EQ(Select(r, *c), MakeRelation(3, {{1, 1, 2}, {1, 2, 2}}));
  EXPECT_EQ(Select(r, *SelCond::MakeNot(c)), MakeRelation(3, {{3, 4, 5}}));
  EXPECT_EQ(Select(r, *SelCond::MakeAnd(SelCond::Eq(1, 1), c)),
            Select(r, *c));
}

TEST(RaPropertyTest, AlgebraicLaws) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    harness::Rng rng(seed);
    size_t k = rng.Range(0, 3);
    Relation a = RandomRelation(rng, k, 6, 3);
    Relation b = RandomRelation(rng, k, 6, 3);
    EXPECT_EQ(Union(a, b), Union(b, a));
    EXPECT_TRUE(Difference(a, a).empty());
    EXPECT_EQ(Product(a, TrueRelation()), a);
    EXPECT_EQ(Product(TrueRelation(), a), a);
    if (k > 0) {
      std::vector<size_t> idx;
      for (size_t i = rng.Range(0, 4); i > 0; --i) idx.push_back(rng.Range(1, k));
      EXPECT_LE(Project(a, idx).size(), a.size());
      Relation s = Select(a, *SelCond::Eq(rng.Range(1, k), rng.Range(1, k)));
      for (const auto& row : s.rows()) EXPECT_TRUE(a.contains(row));
    }
  }
}

}  // namespace
}  // namespace pgqlab
