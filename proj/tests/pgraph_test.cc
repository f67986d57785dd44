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
#include "pgqlab/property_graph.h"
#include "test_util.h"

namespace pgqlab {
namespace {

using testing::Id;
using testing::ThrowsCode;

ViewRelations Empty(size_t k) {
  return {Relation(k),     Relation(k),     Relation(2 * k),
          Relation(2 * k), Relation(k + 1), Relation(k + 2)};
}

// Accounts a1..a3, transfers t1: a1->a2 (150), t2: a2->a3 (50).
ViewRelations BankView() {
  ViewRelations r = Empty(1);
  for (const char* a : {"a1", "a2", "a3"}) r[0].Insert({a});
  r[1] = MakeRelation(1, {{"t1"}, {"t2"}});
  r[2] = MakeRelation(2, {{"t1", "a1"}, {"t2", "a2"}});
  r[3] = MakeRelation(2, {{"t1", "a2"}, {"t2", "a3"}});
  r[4] = MakeRelation(2, {{"t1", "Transfer"}, {"t2", "Transfer"},
                          {"a1", "Account"}});
  r[5] = MakeRelation(3, {{"t1", "amount", 150}, {"t2", "amount", 50},
                          {"a1", "iban", "DE01"}});
  return r;
}

TEST(ValidateViewTest, EmptyRelationsAreValid) {
  ViewReport r = ValidateView(Empty(1));
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.id_arity, 1u);
  EXPECT_TRUE(r.violations.empty());
}

TEST(ValidateViewTest, NodesAndEdgesMustBeDisjoint) {
  ViewRelations r = Empty(1);
  r[0] = MakeRelation(1, {{1}});
  r[1] = MakeRelation(1, {{1}});
  r[2] = MakeRelation(2, {{1, 1}});
  r[3] = MakeRelation(2, {{1, 1}});
  EXPECT_EQ(ValidateView(r).ViolatedConditions(), (std::set<int>{1}));
}

TEST(ValidateViewTest, SourceMustBeFunctional) {
  ViewRelations r = Empty(1);
  r[0] = MakeRelation(1, {{1}, {2}});
  r[1] = MakeRelation(1, {{9}});
  r[2] = MakeRelation(2, {{9, 1}, {9, 2}});
  r[3] = MakeRelation(2, {{9, 1}});
  ViewReport rep = ValidateView(r);
  EXPECT_FALSE(rep.valid);
  EXPECT_EQ(rep.ViolatedConditions(), (std::set<int>{2}));
}

TEST(ValidateViewTest, LabelsAndPropertiesNeedElements) {
  ViewRelations r = BankView();
  r[4].Insert({"ghost", "X"});
  EXPECT_EQ(ValidateView(r).ViolatedConditions(), (std::set<int>{3}));
  r = BankView();
  r[5].Insert({"t1", "amount", 151});
  EXPECT_EQ(ValidateView(r).ViolatedConditions(), (std::set<int>{4}));
}

TEST(ValidateViewTest, ArityChecks) {
  ViewRelations r = Empty(1);
  r[5] = Relation(4);
  EXPECT_FALSE(ValidateView(r).valid);
  EXPECT_TRUE(ValidateView(Empty(2)).valid);
  EXPECT_FALSE(ValidateView(Empty(2), 1).valid);
  EXPECT_TRUE(ValidateView(Empty(2), 2).valid);
}

TEST(PgViewTest, BankGraph) {
  PropertyGraph g = PgView(BankView());
  EXPECT_EQ(g.id_arity(), 1u);
  EXPECT_EQ(g.nodes().size(), 3u);
  EXPECT_EQ(g.edges(), (std::set<Ident>{Id("t1"), Id("t2")}));
  EXPECT_EQ(g.src().at(Id("t1")), Id("a1"));
  EXPECT_EQ(g.tgt().at(Id("t2")), Id("a3"));
  EXPECT_EQ(LabelsOf(g, Id("t1")), (std::set<Value>{"Transfer"}));
  EXPECT_TRUE(LabelsOf(g, Id("a3")).empty());
  EXPECT_EQ(PropOf(g, Id("t1"), "amount"), Value(150));
  EXPECT_FALSE(PropOf(g, Id("t1"), "unused").has_value());
}

TEST(PgViewTest, UnknownIds) {
  PropertyGraph g = PgView(BankView());
  EXPECT_TRUE(
      ThrowsCode([&] { LabelsOf(g, Id("zz")); }, ErrorCode::kUnknownId));
  EXPECT_TRUE(ThrowsCode([&] { PropOf(g, Id("zz"), "amount"); },
                         ErrorCode::kUnknownId));
}

TEST(PgViewTest, EmptyViewGivesEmptyGraph) {
  PropertyGraph g = PgView(Empty(1));
  EXPECT_TRUE(g.nodes().empty());
  EXPECT_TRUE(g.edges().empty());
}

TEST(PgViewTest, InvalidViewThrows) {
  ViewRelations r = BankView();
  r[2].Insert({"t1", "a3"});
  EXPECT_TRUE(ThrowsCode([&] { PgView(r); }, ErrorCode::kInvalidView));
}

TEST(PgViewTest, ExactArity) {
  EXPECT_TRUE(ThrowsCode([] { PgViewExactArity(Empty(2), 1); },
                         ErrorCode::kInvalidView));
  EXPECT_EQ(PgViewExactArity(Empty(2), 2).id_arity(), 2u);
  EXPECT_EQ(PgViewExactArity(BankView(), 1), PgView(BankView()));
}

TEST(PgViewPropertyTest, RoundTripAndInvariants) {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    harness::Rng rng(seed);
    PropertyGraph g = harness::GenGraph(rng);
    ViewRelations rels = g.ToRelations();
    ASSERT_TRUE(ValidateView(rels).valid);
    PropertyGraph h = PgView(rels);
    EXPECT_EQ(g, h);
    for (const auto& e : h.edges()) {
      EXPECT_TRUE(h.nodes().count(h.src().at(e)));
      EXPECT_TRUE(h.nodes().count(h.tgt().at(e)));
      EXPECT_FALSE(h.nodes().count(e));
    }
  }
}

}  // namespace
}  // namespace pgqlab
