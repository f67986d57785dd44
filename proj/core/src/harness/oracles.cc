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

#include "pgqlab/harness/oracles.h"

#include <algorithm>
#include <functional>
#include <map>

#include "pgqlab/error.h"

namespace pgqlab::harness {

Relation BruteReach(const PropertyGraph& g) {
  std::vector<Ident> nodes(g.nodes().begin(), g.nodes().end());
  const size_t n = nodes.size();
  std::map<Ident, size_t> index;
  for (size_t i = 0; i < n; ++i) index[nodes[i]] = i;

  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) m[i][i] = true;
  for (const auto& e : g.edges()) {
    m[index.at(g.src().at(e))][index.at(g.tgt().at(e))] = true;
  }
  for (;;) {
    auto next = m;
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        if (!m[i][j]) continue;
        for (size_t l = 0; l < n; ++l) {
          if (m[j][l]) next[i][l] = true;
        }
      }
    }
    if (next == m) break;
    m = std::move(next);
  }
  Relation out(2 * g.id_arity());
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (m[i][j]) out.Insert(Concat(nodes[i], nodes[j]));
    }
  }
  return out;
}

Relation BruteIncreasingPaths(const PropertyGraph& g, const Value& key) {
  struct Step { Ident to; int64_t amount; };
  std::map<Ident, std::vector<Step>> out_edges;
  for (const auto& e : g.edges()) {
    auto it = g.prop().find({e, key});
    if (it == g.prop().end() || !it->second.is_int()) {
      throw Error(ErrorCode::kMissingAmount,
                  "edge " + TupleToString(e) + " has no integer " +
                      key.ToString());
    }
    out_edges[g.src().at(e)].push_back({g.tgt().at(e), it->second.as_int()});
  }
  Relation out(2 * g.id_arity());
  for (const auto& start : g.nodes()) {
    std::set<std::pair<Ident, int64_t>> seen;
    std::function<void(const Ident&, int64_t, bool)> dfs =
        [&](const Ident& at, int64_t last, bool any) {
          auto it = out_edges.find(at);
          if (it == out_edges.end()) return;
          for (const Step& s : it->second) {
            if (any && s.amount <= last) continue;
            if (!seen.insert({s.to, s.amount}).second) continue;
            out.Insert(Concat(start, s.to));
            dfs(s.to, s.amount, true);
          }
        };
    dfs(start, 0, false);
  }
  return out;
}

bool BruteAlternating(const Database& db) {
  const char* names[] = {"RedNodes", "BlueNodes", "Edges", "Source", "Target"};
  const size_t arities[] = {1, 1, 1, 2, 2};
  for (size_t i = 0; i < 5; ++i) {
    if (!db.Has(names[i]) || db.Get(names[i]).arity() != arities[i]) {
      throw Error(ErrorCode::kSchemaMismatch,
                  std::string("colored database needs ") + names[i] + "/" +
                      std::to_string(arities[i]));
    }
  }
  std::map<Value, int> color;  // 1 red, 2 blue, 3 both
  for (const auto& r : db.Get("RedNodes").rows()) color[r[0]] |= 1;
  for (const auto& r : db.Get("BlueNodes").rows()) color[r[0]] |= 2;
  std::map<Value, std::vector<Value>> from, to;
  for (const auto& r : db.Get("Source").rows()) from[r[0]].push_back(r[1]);
  for (const auto& r : db.Get("Target").rows()) to[r[0]].push_back(r[1]);

  // Colored steps a -> b with a and b of different colors.
  std::vector<std::pair<Value, Value>> steps;
  for (const auto& r : db.Get("Edges").rows()) {
    for (const auto& a : from[r[0]]) {
      for (const auto& b : to[r[0]]) {
        int ca = color[a], cb = color[b];
        bool alternates = (ca & 1 && cb & 2) || (ca & 2 && cb & 1);
        if (alternates) steps.emplace_back(a, b);
      }
    }
  }
  std::set<Value> step_targets;
  for (const auto& [a, b] : steps) step_targets.insert(b);
  for (const auto& [a, b] : steps) {
    if (step_targets.count(a)) return true;
  }
  return false;
}

std::set<int> DirectViewCheck(const ViewRelations& rels) {
  const size_t k = rels[0].arity();
  const size_t want[6] = {k, k, 2 * k, 2 * k, k + 1, k + 2};
  bool arity_ok = k >= 1;
  for (size_t i = 0; i < 6; ++i) arity_ok = arity_ok && rels[i].arity() == want[i];
  if (!arity_ok) return {0};

  auto prefix = [&](const Relation& r, size_t from, size_t len) {
    std::set<Tuple> out;
    for (const auto& t : r.rows()) {
      out.insert(Tuple(t.begin() + from, t.begin() + from + len));
    }
    return out;
  };
  const auto& n = rels[0].rows();
  const auto& e = rels[1].rows();
  std::set<Tuple> elements;
  std::set_union(n.begin(), n.end(), e.begin(), e.end(),
                 std::inserter(elements, elements.end()));
  auto subset = [](const std::set<Tuple>& a, const std::set<Tuple>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };

  std::set<int> out;
  if (elements.size() != n.size() + e.size()) out.insert(1);
  for (size_t i : {2, 3}) {
    bool total_function = prefix(rels[i], 0, k) == e &&
                          rels[i].size() == e.size() &&
                          subset(prefix(rels[i], k, k), n);
    if (!total_function) out.insert(2);
  }
  if (!subset(prefix(rels[4], 0, k), elements)) out.insert(3);
  if (!subset(prefix(rels[5], 0, k), elements) ||
      prefix(rels[5], 0, k + 1).size() != rels[5].size()) {
    out.insert(4);
  }
  return out;
}

Relation EnumerateFormulaRel(const Database& db, const Formula& f,
                             const std::vector<std::string>& var_order) {
  std::set<Value> dom_set = EvalDomain(db, f);
  std::vector<Value> dom(dom_set.begin(), dom_set.end());
  const size_t n = var_order.size();
  Relation out(n);
  if (n > 0 && dom.empty()) return out;
  std::vector<size_t> idx(n, 0);
  for (;;) {
    Assignment a;
    Tuple row;
    for (size_t i = 0; i < n; ++i) {
      a[var_order[i]] = dom[idx[i]];
      row.push_back(dom[idx[i]]);
    }
    if (EvalFormula(db, f, a)) out.Insert(row);
    size_t i = n;
    while (i > 0 && ++idx[i - 1] == dom.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace pgqlab::harness
