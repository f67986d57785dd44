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

#ifndef PGQLAB_PROPERTY_GRAPH_H_
#define PGQLAB_PROPERTY_GRAPH_H_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pgqlab/relation.h"
#include "pgqlab/value.h"

namespace pgqlab {

// Node and edge identifiers are k-tuples of values; all identifiers in
// one graph share the same k >= 1.
using Ident = Tuple;

// The six relations N, E, src, tgt, lab, prop of a tabular graph view.
using ViewRelations = std::array<Relation, 6>;

struct ViewViolation {
  // 1..4 for the view conditions (disjointness, src/tgt functions, labels,
  // properties); 0 for relation arities that fit no identifier arity.
  int condition = 0;
  std::vector<Tuple> witnesses;
  std::string detail;
};

struct ViewReport {
  bool valid = true;
  size_t id_arity = 0;  // inferred from N; meaningful only when valid
  std::vector<ViewViolation> violations;

  std::set<int> ViolatedConditions() const;
  std::string ToString() const;
};

// Checks the view conditions on six relations with identifier arity
// inferred from R1. Problems are reported, never thrown.
ViewReport ValidateView(const ViewRelations& rels,
                        std::optional<size_t> expect_arity = std::nullopt);

class PropertyGraph {
 public:
  size_t id_arity() const { return id_arity_; }
  const std::set<Ident>& nodes() const { return nodes_; }
  const std::set<Ident>& edges() const { return edges_; }
  const std::map<Ident, Ident>& src() const { return src_; }
  const std::map<Ident, Ident>& tgt() const { return tgt_; }
  const std::set<std::pair<Ident, Value>>& lab() const { return lab_; }
  const std::map<std::pair<Ident, Value>, Value>& prop() const {
    return prop_;
  }

  bool HasElement(const Ident& id) const {
    return nodes_.count(id) > 0 || edges_.count(id) > 0;
  }

  // Edges leaving / entering a node; empty for unknown nodes.
  const std::vector<Ident>& OutEdges(const Ident& node) const;
  const std::vector<Ident>& InEdges(const Ident& node) const;

  // Unchecked lookups used by the evaluators.
  bool HasLabel(const Ident& id, const Value& label) const {
    return lab_.count({id, label}) > 0;
  }
  const Value* FindProp(const Ident& id, const Value& key) const {
    auto it = prop_.find({id, key});
    return it == prop_.end() ? nullptr : &it->second;
  }

  // Inverse of PgView: the six canonical relations for this graph.
  ViewRelations ToRelations() const;

  friend bool operator==(const PropertyGraph& a, const PropertyGraph& b) {
    return a.id_arity_ == b.id_arity_ && a.nodes_ == b.nodes_ &&
           a.edges_ == b.edges_ && a.src_ == b.src_ && a.tgt_ == b.tgt_ &&
           a.lab_ == b.lab_ && a.prop_ == b.prop_;
  }

 private:
  friend PropertyGraph PgView(const ViewRelations& rels);

  size_t id_arity_ = 1;
  std::set<Ident> nodes_;
  std::set<Ident> edges_;
  std::map<Ident, Ident> src_;
  std::map<Ident, Ident> tgt_;
  std::set<std::pair<Ident, Value>> lab_;
  std::map<std::pair<Ident, Value>, Value> prop_;
  std::map<Ident, std::vector<Ident>> out_;
  std::map<Ident, std::vector<Ident>> in_;
};

// Interprets six relations as a property graph; identifier arity is taken
// from R1. Throws kInvalidView (with the report text) when the relations
// violate any view condition.
PropertyGraph PgView(const ViewRelations& rels);

// PgView restricted to identifier arity exactly k.
PropertyGraph PgViewExactArity(const ViewRelations& rels, size_t k);

// Throws kUnknownId when id is neither a node nor an edge of g.
std::set<Value> LabelsOf(const PropertyGraph& g, const Ident& id);
std::optional<Value> PropOf(const PropertyGraph& g, const Ident& id,
                            const Value& key);

}  // namespace pgqlab

#endif  // PGQLAB_PROPERTY_GRAPH_H_
