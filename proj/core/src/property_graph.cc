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

#include "pgqlab/property_graph.h"

#include <cstdint>
#include <sstream>

#include "pgqlab/error.h"

namespace pgqlab {
namespace {

Tuple Slice(const Tuple& t, size_t from, size_t len) {
  return Tuple(t.begin() + from, t.begin() + from + len);
}

// Condition (2) for one of R3/R4: rows must pair an edge of R2 with a node
// of R1, and every edge needs exactly one row.
void CheckEdgeFunction(const Relation& fn, const Relation& nodes,
                       const Relation& edges, size_t k, const char* name,
                       std::vector<ViewViolation>& out) {
  std::map<Tuple, std::vector<Tuple>> by_edge;
  for (const Tuple& row : fn.rows()) {
    Tuple e = Slice(row, 0, k);
    Tuple n = Slice(row, k, k);
    if (!edges.contains(e)) {
      out.push_back({2, {row}, std::string(name) + " row for a non-edge"});
    }
    if (!nodes.contains(n)) {
      out.push_back({2, {row}, std::string(name) + " row targets a non-node"});
    }
    by_edge[e].push_back(row);
  }
  for (const Tuple& e : edges.rows()) {
    auto it = by_edge.find(e);
    if (it == by_edge.end()) {
      out.push_back({2, {e}, std::string(name) + " is not total on edges"});
    } else if (it->second.size() > 1) {
      out.push_back({2, it->second, std::string(name) + " is not functional"});
    }
  }
}

}  // namespace

std::set<int> ViewReport::ViolatedConditions() const {
  std::set<int> out;
  for (const ViewViolation& v : violations) out.insert(v.condition);
  return out;
}

std::string ViewReport::ToString() const {
  std::ostringstream os;
  if (valid) {
    os << "valid (identifier arity " << id_arity << ")";
    return os.str();
  }
  os << "invalid:";
  for (const ViewViolation& v : violations) {
    os << "\n  condition " << v.condition << ": " << v.detail;
    for (const Tuple& w : v.witnesses) os << " " << TupleToString(w);
  }
  return os.str();
}

ViewReport ValidateView(const ViewRelations& rels,
                        std::optional<size_t> expect_arity) {
  ViewReport report;
  const size_t k = rels[0].arity();
  report.id_arity = k;
  auto arity_problem = [&](const std::string& detail) {
    report.violations.push_back({0, {}, detail});
  };
  if (k == 0) arity_problem("node relation must have arity >= 1");
  if (expect_arity && *expect_arity != k) {
    arity_problem("identifier arity " + std::to_string(k) + ", expected " +
                  std::to_string(*expect_arity));
  }
  const std::array<size_t, 6> want = {k, k, 2 * k, 2 * k, k + 1, k + 2};
  for (size_t i = 1; i < 6; ++i) {
    if (rels[i].arity() != want[i]) {
      arity_problem("R" + std::to_string(i + 1) + " has arity " +
                    std::to_string(rels[i].arity()) + ", expected " +
                    std::to_string(want[i]));
    }
  }
  if (!report.violations.empty()) {
    report.valid = false;
    return report;
  }

  const Relation& nodes = rels[0];
  const Relation& edges = rels[1];
  std::vector<Tuple> shared;
  for (const Tuple& n : nodes.rows()) {
    if (edges.contains(n)) shared.push_back(n);
  }
  if (!shared.empty()) {
    report.violations.push_back({1, shared, "node and edge ids overlap"});
  }

  CheckEdgeFunction(rels[2], nodes, edges, k, "src", report.violations);
  CheckEdgeFunction(rels[3], nodes, edges, k, "tgt", report.violations);

  auto is_element = [&](const Tuple& id) {
    return nodes.contains(id) || edges.contains(id);
  };
  for (const Tuple& row : rels[4].rows()) {
    if (!is_element(Slice(row, 0, k))) {
      report.violations.push_back({3, {row}, "label on unknown element"});
    }
  }

  std::map<Tuple, std::vector<Tuple>> by_key;
  for (const Tuple& row : rels[5].rows()) {
    if (!is_element(Slice(row, 0, k))) {
      report.violations.push_back({4, {row}, "property on unknown element"});
    }
    by_key[Slice(row, 0, k + 1)].push_back(row);
  }
  for (auto& [key, rows] : by_key) {
    if (rows.size() > 1) {
      report.violations.push_back({4, rows, "property is not functional"});
    }
  }

  report.valid = report.violations.empty();
  return report;
}

namespace {
const std::vector<Ident> kNoEdges;
}  // namespace

const std::vector<Ident>& PropertyGraph::OutEdges(const Ident& node) const {
  auto it = out_.find(node);
  return it == out_.end() ? kNoEdges : it->second;
}

const std::vector<Ident>& PropertyGraph::InEdges(const Ident& node) const {
  auto it = in_.find(node);
  return it == in_.end() ? kNoEdges : it->second;
}

ViewRelations PropertyGraph::ToRelations() const {
  const size_t k = id_arity_;
  ViewRelations rels = {Relation(k),     Relation(k),     Relation(2 * k),
                        Relation(2 * k), Relation(k + 1), Relation(k + 2)};
  for (const Ident& n : nodes_) rels[0].Insert(n);
  for (const Ident& e : edges_) rels[1].Insert(e);
  for (const auto& [e, n] : src_) rels[2].Insert(Concat(e, n));
  for (const auto& [e, n] : tgt_) rels[3].Insert(Concat(e, n));
  for (const auto& [id, l] : lab_) rels[4].Insert(Concat(id, {l}));
  for (const auto& [key, v] : prop_) {
    rels[5].Insert(Concat(key.first, {key.second, v}));
  }
  return rels;
}

PropertyGraph PgView(const ViewRelations& rels) {
  ViewReport report = ValidateView(rels);
  if (!report.valid) throw Error(ErrorCode::kInvalidView, report.ToString());
  const size_t k = report.id_arity;

  PropertyGraph g;
  g.id_arity_ = k;
  g.nodes_ = rels[0].rows();
  g.edges_ = rels[1].rows();
  for (const Tuple& row : rels[2].rows()) {
    g.src_.emplace(Slice(row, 0, k), Slice(row, k, k));
  }
  for (const Tuple& row : rels[3].rows()) {
    g.tgt_.emplace(Slice(row, 0, k), Slice(row, k, k));
  }
  for (const Tuple& row : rels[4].rows()) {
    g.lab_.emplace(Slice(row, 0, k), row[k]);
  }
  for (const Tuple& row : rels[5].rows()) {
    g.prop_.emplace(std::make_pair(Slice(row, 0, k), row[k]), row[k + 1]);
  }
  for (const Ident& e : g.edges_) {
    g.out_[g.src_.at(e)].push_back(e);
    g.in_[g.tgt_.at(e)].push_back(e);
  }
  return g;
}

PropertyGraph PgViewExactArity(const ViewRelations& rels, size_t k) {
  ViewReport report = ValidateView(rels, k);
  if (!report.valid) throw Error(ErrorCode::kInvalidView, report.ToString());
  return PgView(rels);
}

std::set<Value> LabelsOf(const PropertyGraph& g, const Ident& id) {
  if (!g.HasElement(id)) {
    throw Error(ErrorCode::kUnknownId, TupleToString(id));
  }
  std::set<Value> out;
  for (auto it = g.lab().lower_bound({id, Value(int64_t{INT64_MIN})});
       it != g.lab().end() && it->first == id; ++it) {
    out.insert(it->second);
  }
  return out;
}

std::optional<Value> PropOf(const PropertyGraph& g, const Ident& id,
                            const Value& key) {
  if (!g.HasElement(id)) {
    throw Error(ErrorCode::kUnknownId, TupleToString(id));
  }
  const Value* v = g.FindProp(id, key);
  if (v == nullptr) return std::nullopt;
  return *v;
}

}  // namespace pgqlab
