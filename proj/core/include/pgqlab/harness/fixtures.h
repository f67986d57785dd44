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

#ifndef PGQLAB_HARNESS_FIXTURES_H_
#define PGQLAB_HARNESS_FIXTURES_H_

#include <string>
#include <vector>

#include "pgqlab/property_graph.h"
#include "pgqlab/query.h"
#include "pgqlab/relation.h"

namespace pgqlab::harness {

// Accounts identified by IBAN strings; Transfer(t, src, tgt, ts, amount)
// and Above100(amount).
Database TransfersDb();
// Reachability over transfers labeled Big, with IBANs as output (RW).
std::string TransfersQueryText();
Relation TransfersOracle(const Database& db);

// Account(bank, branch, acct); Transfer(t, bank, branch, acct, bank,
// branch, acct, ts, amount); Lt on the amounts and 0.
Database WeightedDb();
// Adds Lt for the amounts of Transfer (and 0), replacing any old one.
void AddAmountOrder(Database& db);

// Bank and branch pairs joined by transfers, over composite account
// identifiers (EXT(3)).
std::string CompositeQueryText();
Relation CompositeOracle(const Database& db);

// Account pairs joined by a path of strictly increasing amounts, over
// node copies that remember the last amount (EXT(4)).
std::string IncreasingQueryText();
Relation IncreasingOracle(const Database& db);

// RedNodes, BlueNodes, Edges, Source, Target.
Database ColoredDb();
// Boolean (arity 0): a walk of at least two color-alternating edges (RW).
std::string AlternatingQueryText();
Relation AlternatingOracle(const Database& db);

// The weighted database as a graph with identifiers (acct triples) and
// edges (t, "t", "t") carrying label Transfer and property amount.
PropertyGraph AccountGraph(const Database& db);

struct DemoResult {
  std::string name;
  std::string fragment;
  Relation engine;
  Relation oracle;
  bool agree = false;
};

std::vector<DemoResult> RunDemo();

}  // namespace pgqlab::harness

#endif  // PGQLAB_HARNESS_FIXTURES_H_
