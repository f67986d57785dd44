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

#include "test_util.h"

namespace pgqlab::testing {

PropertyGraph SmallGraph(
    const std::vector<Value>& nodes, const std::vector<EdgeSpec>& edges,
    const std::vector<std::pair<Value, Value>>& labels,
    const std::vector<std::tuple<Value, Value, Value>>& props) {
  ViewRelations rels = {Relation(1), Relation(1), Relation(2),
                        Relation(2), Relation(2), Relation(3)};
  for (const auto& n : nodes) rels[0].Insert({n});
  for (const auto& e : edges) {
    rels[1].Insert({e.id});
    rels[2].Insert({e.id, e.src});
    rels[3].Insert({e.id, e.tgt});
  }
  for (const auto& [id, l] : labels) rels[4].Insert({id, l});
  for (const auto& [id, k, v] : props) rels[5].Insert({id, k, v});
  return PgView(rels);
}

Relation RandomRelation(harness::Rng& rng, size_t arity, size_t max_rows,
                        int domain) {
  Relation r(arity);
  for (size_t i = rng.Range(0, max_rows); i > 0; --i) {
    Tuple t;
    for (size_t j = 0; j < arity; ++j) {
      t.push_back(Value(static_cast<int64_t>(rng.Range(1, domain))));
    }
    r.Insert(t);
  }
  return r;
}

Ident Id(Value v) { return Ident{v}; }

}  // namespace pgqlab::testing
