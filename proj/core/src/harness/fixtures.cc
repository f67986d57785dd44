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

#include "pgqlab/harness/fixtures.h"

#include <map>
#include <set>
#include <utility>

#include "pgqlab/error.h"
#include "pgqlab/harness/oracles.h"
#include "pgqlab/text.h"

namespace pgqlab::harness {

Database TransfersDb() {
  Database db;
  db.Put("Account", MakeRelation(1, {{"DE01"}, {"DE02"}, {"DE03"}, {"DE04"}}));
  db.Put("Transfer", MakeRelation(5, {{1, "DE01", "DE02", 1, 150},
                                      {2, "DE02", "DE03", 2, 50},
                                      {3, "DE02", "DE04", 3, 300},
                                      {4, "DE04", "DE01", 4, 120},
                                      {5, "DE03", "DE01", 5, 500},
                                      {6, "DE03", "DE04", 6, 80}}));
  db.Put("Above100", MakeRelation(1, {{150}, {300}, {120}, {500}}));
  return db;
}

std::string TransfersQueryText() {
  return "MATCH (x) (-[t]-> <Transfer(t) & Big(t)>){1,*} (y) "
         "OUTPUT(x.iban, y.iban) ON("
         "REL Account; "
         "PI[1](REL Transfer); "
         "PI[1,2](REL Transfer); "
         "PI[1,3](REL Transfer); "
         "PI[1](REL Transfer) X CONST \"Transfer\" UNION "
         "PI[1,7](SIGMA[$5=$6](REL Transfer X REL Above100) X CONST \"Big\"); "
         "PI[1,2,1](REL Account X CONST \"iban\") UNION "
         "PI[1,6,5](REL Transfer X CONST \"amount\"))";
}

Relation TransfersOracle(const Database& db) {
  std::map<Value, std::set<Value>> adj;
  for (const auto& t : db.Get("Transfer").rows()) {
    if (t[4].is_int() && t[4].as_int() > 100) adj[t[1]].insert(t[2]);
  }
  std::set<Value> accounts;
  for (const auto& a : db.Get("Account").rows()) accounts.insert(a[0]);
  Relation out(2);
  for (const auto& start : accounts) {
    std::set<Value> seen;
    std::vector<Value> stack(adj[start].begin(), adj[start].end());
    while (!stack.empty()) {
      Value v = stack.back();
      stack.pop_back();
      if (!seen.insert(v).second) continue;
      for (const auto& w : adj[v]) stack.push_back(w);
    }
    for (const auto& v : seen) {
      if (accounts.count(v)) out.Insert({start, v});
    }
  }
  return out;
}

void AddAmountOrder(Database& db) {
  std::set<Value> amounts = {Value(0)};
  for (const auto& t : db.Get("Transfer").rows()) amounts.insert(t[8]);
  Relation lt(2);
  for (const auto& a : amounts) {
    for (const auto& b : amounts) {
      if (a < b) lt.Insert({a, b});
    }
  }
  db.Put("Lt", std::move(lt));
}

Database WeightedDb() {
  Database db;
  db.Put("Account",
         MakeRelation(3, {{1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {2, 1, 1}}));
  db.Put("Transfer", MakeRelation(9, {{1, 1, 1, 1, 1, 1, 2, 1, 20},
                                      {2, 1, 1, 2, 1, 2, 1, 2, 30},
                                      {3, 1, 2, 1, 2, 1, 1, 3, 10},
                                      {4, 2, 1, 1, 1, 1, 1, 4, 40},
                                      {5, 1, 1, 2, 2, 1, 1, 5, 50}}));
  AddAmountOrder(db);
  return db;
}

PropertyGraph AccountGraph(const Database& db) {
  ViewRelations rels = {Relation(3), Relation(3), Relation(6),
                        Relation(6), Relation(4), Relation(5)};
  for (const auto& a : db.Get("Account").rows()) rels[0].Insert(a);
  for (const auto& t : db.Get("Transfer").rows()) {
    Tuple e{t[0], "t", "t"};
    rels[1].Insert(e);
    rels[2].Insert(Concat(e, {t[1], t[2], t[3]}));
    rels[3].Insert(Concat(e, {t[4], t[5], t[6]}));
    rels[4].Insert(Concat(e, {"Transfer"}));
    rels[5].Insert(Concat(e, {"amount", t[8]}));
  }
  return PgView(rels);
}

std::string CompositeQueryText() {
  return "PI[1,2,4,5](MATCH (x) (-[t]-> <Transfer(t)>){1,*} (y) "
         "OUTPUT(x, y) ON("
         "REL Account; "
         "PI[1,10,10](REL Transfer X CONST \"t\"); "
         "PI[1,10,10,2,3,4](REL Transfer X CONST \"t\"); "
         "PI[1,10,10,5,6,7](REL Transfer X CONST \"t\"); "
         "PI[1,10,10,11](REL Transfer X CONST \"t\" X CONST \"Transfer\"); "
         "PI[1,1,1,1,1](SIGMA[!($1=$1)](REL Account))) ARITY 3)";
}

Relation CompositeOracle(const Database& db) {
  PropertyGraph g = AccountGraph(db);
  Relation reach = BruteReach(g);
  std::map<Ident, std::set<Ident>> from;
  for (const auto& r : reach.rows()) {
    from[Tuple(r.begin(), r.begin() + 3)].insert(Tuple(r.begin() + 3, r.end()));
  }
  Relation out(4);
  for (const auto& e : g.edges()) {
    const Ident& s = g.src().at(e);
    for (const auto& b : from[g.tgt().at(e)]) out.Insert({s[0], s[1], b[0], b[1]});
  }
  return out;
}

std::string IncreasingQueryText() {
  const std::string nodes =
      "(REL Account X CONST 0 UNION PI[5,6,7,9](REL Transfer))";
  const std::string je =
      "(SIGMA[$2=$10 & $3=$11 & $4=$12 & $13=$14 & $9=$15]"
      "(REL Transfer X " + nodes + " X REL Lt) X CONST \"e\")";
  return "PI[1,2,3,5,6,7](SIGMA[$4=$9]("
         "MATCH (x) -[]->{1,*} (y) OUTPUT(x, y) ON(" +
         nodes + "; " +
         "PI[1,13,16,16](" + je + "); " +
         "PI[1,13,16,16,10,11,12,13](" + je + "); " +
         "PI[1,13,16,16,5,6,7,9](" + je + "); " +
         "PI[1,1,1,1,1](SIGMA[!($1=$1)](REL Account)); " +
         "PI[1,13,16,16,17,9](" + je + " X CONST \"amount\")) ARITY 4"
         " X CONST 0))";
}

Relation IncreasingOracle(const Database& db) {
  return BruteIncreasingPaths(AccountGraph(db), "amount");
}

Database ColoredDb() {
  Database db;
  db.Put("RedNodes", MakeRelation(1, {{1}, {3}}));
  db.Put("BlueNodes", MakeRelation(1, {{2}, {4}}));
  db.Put("Edges", MakeRelation(1, {{10}, {11}, {12}}));
  db.Put("Source", MakeRelation(2, {{10, 1}, {11, 2}, {12, 3}}));
  db.Put("Target", MakeRelation(2, {{10, 2}, {11, 3}, {12, 1}}));
  return db;
}

std::string AlternatingQueryText() {
  return "MATCH (((a) -[]-> (b)) <(Red(a) & Blue(b)) | (Blue(a) & Red(b))>)"
         "{2,*} OUTPUT() ON("
         "REL RedNodes UNION REL BlueNodes; "
         "REL Edges; REL Source; REL Target; "
         "REL RedNodes X CONST \"Red\" UNION REL BlueNodes X CONST \"Blue\"; "
         "PI[1,1,1](SIGMA[!($1=$1)](REL Edges)))";
}

Relation AlternatingOracle(const Database& db) {
  Relation out(0);
  if (BruteAlternating(db)) out.Insert({});
  return out;
}

std::vector<DemoResult> RunDemo() {
  struct Item {
    std::string name;
    Database db;
    std::string text;
    Relation (*oracle)(const Database&);
  };
  const std::vector<Item> items = {
      {"alternating", ColoredDb(), AlternatingQueryText(), AlternatingOracle},
      {"composite", WeightedDb(), CompositeQueryText(), CompositeOracle},
      {"increasing", WeightedDb(), IncreasingQueryText(), IncreasingOracle},
      {"transfers", TransfersDb(), TransfersQueryText(), TransfersOracle},
  };
  std::vector<DemoResult> out;
  for (const auto& it : items) {
    QueryPtr q = ParseQuery(it.text);
    DemoResult r;
    r.name = it.name;
    r.fragment = ClassifyFragment(*q, it.db.Schema()).ToString();
    r.engine = EvalQuery(it.db, *q);
    r.oracle = it.oracle(it.db);
    r.agree = r.engine == r.oracle;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace pgqlab::harness
