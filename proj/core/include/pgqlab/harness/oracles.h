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

#ifndef PGQLAB_HARNESS_ORACLES_H_
#define PGQLAB_HARNESS_ORACLES_H_

#include <set>
#include <string>
#include <vector>

#include "pgqlab/formula.h"
#include "pgqlab/property_graph.h"
#include "pgqlab/relation.h"

// Brute-force reference procedures. None of them calls the pattern
// evaluator, the query evaluator or the algebraic formula evaluator.
namespace pgqlab::harness {

// Reflexive-transitive closure of the edge relation on the nodes of g,
// rows (source id, target id), by repeated boolean matrix products.
Relation BruteReach(const PropertyGraph& g);

// Pairs joined by a nonempty path whose edge amounts strictly increase.
// Throws kMissingAmount when an edge lacks amount_key or has a string
// amount.
Relation BruteIncreasingPaths(const PropertyGraph& g, const Value& amount_key);

// Whether the colored database has a walk of two or more edges along
// which colors alternate. Needs RedNodes/1, BlueNodes/1, Edges/1,
// Source/2, Target/2; throws kSchemaMismatch otherwise.
bool BruteAlternating(const Database& db);

// Condition numbers (0 for arities) violated by six relations, computed
// directly from the definitions with set algebra.
std::set<int> DirectViewCheck(const ViewRelations& rels);

// Satisfying assignments found by trying every tuple of the domain
// against the pointwise evaluator.
Relation EnumerateFormulaRel(const Database& db, const Formula& f,
                             const std::vector<std::string>& var_order);

}  // namespace pgqlab::harness

#endif  // PGQLAB_HARNESS_ORACLES_H_
