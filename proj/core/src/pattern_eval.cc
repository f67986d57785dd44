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

#include "pgqlab/pattern_eval.h"

#include <algorithm>
#include <utility>

#include "pgqlab/error.h"

namespace pgqlab {

namespace {

using Pair = std::pair<Ident, Ident>;
using PairSet = std::set<Pair>;

const Ident& Lookup(const Binding& mu, const std::string& var) {
  auto it = mu.find(var);
  if (it == mu.end()) {
    throw Error(ErrorCode::kUnboundVariable,
                "condition variable '" + var + "' is not bound");
  }
  return it->second;
}

bool Compatible(const Binding& a, const Binding& b) {
  const Binding& small = a.size() <= b.size() ? a : b;
  const Binding& large = a.size() <= b.size() ? b : a;
  for (const auto& [var, id] : small) {
    auto it = large.find(var);
    if (it != large.end() && it->second != id) return false;
  }
  return true;
}

Binding Merge(const Binding& a, const Binding& b) {
  Binding out = a;
  out.insert(b.begin(), b.end());
  return out;
}

Binding Bind(const std::string& var, const Ident& id) {
  if (var.empty()) return {};
  return {{var, id}};
}

// Composition of two endpoint relations.
PairSet Compose(const PairSet& left,
                const std::map<Ident, std::vector<Ident>>& step) {
  PairSet out;
  for (const auto& [s, m] : left) {
    auto it = step.find(m);
    if (it == step.end()) continue;
    for (const auto& t : it->second) out.emplace(s, t);
  }
  return out;
}

std::set<MatchTriple> EvalRepeat(const PropertyGraph& g,
                                 const Pattern::Repeat& r,
                                 const EvalOptions& opts);

std::set<MatchTriple> Eval(const PropertyGraph& g, const Pattern& p,
                           const EvalOptions& opts) {
  return std::visit(
      [&](const auto& n) -> std::set<MatchTriple> {
        using T = std::decay_t<decltype(n)>;
        std::set<MatchTriple> out;
        if constexpr (std::is_same_v<T, Pattern::Node>) {
          for (const auto& v : g.nodes()) out.insert({v, v, Bind(n.var, v)});
        } else if constexpr (std::is_same_v<T, Pattern::FwdEdge>) {
          for (const auto& e : g.edges()) {
            out.insert({g.src().at(e), g.tgt().at(e), Bind(n.var, e)});
          }
        } else if constexpr (std::is_same_v<T, Pattern::BwdEdge>) {
          for (const auto& e : g.edges()) {
            out.insert({g.tgt().at(e), g.src().at(e), Bind(n.var, e)});
          }
        } else if constexpr (std::is_same_v<T, Pattern::Alt>) {
          out = Eval(g, *n.left, opts);
          auto right = Eval(g, *n.right, opts);
          out.insert(right.begin(), right.end());
        } else if constexpr (std::is_same_v<T, Pattern::Concat>) {
          auto left = Eval(g, *n.left, opts);
          auto right = Eval(g, *n.right, opts);
          std::map<Ident, std::vector<const MatchTriple*>> by_src;
          for (const auto& m : right) by_src[m.src].push_back(&m);
          for (const auto& l : left) {
            auto it = by_src.find(l.tgt);
            if (it == by_src.end()) continue;
            for (const MatchTriple* r : it->second) {
              if (opts.fault != EvalFault::kSkipCompatibility &&
                  !Compatible(l.mu, r->mu)) {
                continue;
              }
              out.insert({l.src, r->tgt, Merge(l.mu, r->mu)});
            }
          }
        } else if constexpr (std::is_same_v<T, Pattern::Filter>) {
          for (auto& m : Eval(g, *n.body, opts)) {
            if (EvalCondition(g, m.mu, *n.cond)) out.insert(m);
          }
        } else {
          out = EvalRepeat(g, n, opts);
        }
        return out;
      },
      p.node);
}

std::set<MatchTriple> EvalRepeat(const PropertyGraph& g,
                                 const Pattern::Repeat& r,
                                 const EvalOptions& opts) {
  std::map<Ident, std::vector<Ident>> step;
  for (const auto& m : Eval(g, *r.body, opts)) step[m.src].push_back(m.tgt);
  for (auto& [s, ts] : step) {
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  }

  PairSet cur;
  for (const auto& v : g.nodes()) cur.emplace(v, v);
  PairSet result;
  auto take = [&](size_t i, const PairSet& pairs) {
    if (i == 0 && opts.fault == EvalFault::kDropZeroRepetition) return;
    result.insert(pairs.begin(), pairs.end());
  };

  size_t lo = r.lo;
  if (lo == 0 && !r.hi && opts.fault == EvalFault::kDropZeroRepetition) lo = 1;
  for (size_t i = 0; i < lo && !cur.empty(); ++i) cur = Compose(cur, step);
  if (!r.hi) {
    // Closure of cur under step.
    result = cur;
    PairSet frontier = cur;
    while (!frontier.empty()) {
      PairSet next;
      for (const auto& pr : Compose(frontier, step)) {
        if (result.insert(pr).second) next.insert(pr);
      }
      frontier = std::move(next);
    }
  } else {
    take(r.lo, cur);
    // Once the set of i-step pairs repeats, later powers cycle through
    // sets already taken.
    std::set<PairSet> visited{cur};
    for (size_t i = r.lo + 1; i <= *r.hi && !cur.empty(); ++i) {
      cur = Compose(cur, step);
      if (!visited.insert(cur).second) break;
      take(i, cur);
    }
  }

  std::set<MatchTriple> out;
  for (const auto& [s, t] : result) out.insert({s, t, {}});
  return out;
}

}  // namespace

bool EvalCondition(const PropertyGraph& g, const Binding& mu,
                   const Condition& theta) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Condition::PropEq>) {
          const Value* a = g.FindProp(Lookup(mu, n.var), n.key);
          const Value* b = g.FindProp(Lookup(mu, n.var2), n.key2);
          return a && b && *a == *b;
        } else if constexpr (std::is_same_v<T, Condition::HasLabel>) {
          return g.HasLabel(Lookup(mu, n.var), n.label);
        } else if constexpr (std::is_same_v<T, Condition::Not>) {
          return !EvalCondition(g, mu, *n.inner);
        } else if constexpr (std::is_same_v<T, Condition::And>) {
          return EvalCondition(g, mu, *n.left) &&
                 EvalCondition(g, mu, *n.right);
        } else {
          return EvalCondition(g, mu, *n.left) ||
                 EvalCondition(g, mu, *n.right);
        }
      },
      theta.node);
}

std::set<MatchTriple> EvalPattern(const PropertyGraph& g, const Pattern& p,
                                  const EvalOptions& opts) {
  return Eval(g, p, opts);
}

size_t OutputArity(const OutputPattern& op, size_t k) {
  size_t n = 0;
  for (const auto& item : op.omega) n += item.key ? 1 : k;
  return n;
}

Relation EvalOutput(const PropertyGraph& g, const OutputPattern& op,
                    const EvalOptions& opts) {
  Relation out(OutputArity(op, g.id_arity()));
  for (const auto& m : Eval(g, *op.body, opts)) {
    Tuple row;
    bool defined = true;
    for (const auto& item : op.omega) {
      const Ident& id = m.mu.at(item.var);
      if (item.key) {
        const Value* v = g.FindProp(id, *item.key);
        if (!v) {
          defined = false;
          break;
        }
        row.push_back(*v);
      } else {
        row.insert(row.end(), id.begin(), id.end());
      }
    }
    if (defined) out.Insert(std::move(row));
  }
  return out;
}

namespace {

std::vector<Ident> Join(const std::vector<Ident>& a,
                        const std::vector<Ident>& b) {
  std::vector<Ident> out = a;
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

void CheckLimit(const std::set<PathMatch>& s, size_t limit) {
  if (limit && s.size() > limit) {
    throw Error(ErrorCode::kPathLimit,
                "more than " + std::to_string(limit) + " paths");
  }
}

std::set<PathMatch> Paths(const PropertyGraph& g, const Pattern& p,
                          size_t bound, size_t limit) {
  std::set<PathMatch> out;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Pattern::Node>) {
          for (const auto& v : g.nodes()) out.insert({{v}, Bind(n.var, v)});
        } else if constexpr (std::is_same_v<T, Pattern::FwdEdge>) {
          for (const auto& e : g.edges()) {
            out.insert({{g.src().at(e), e, g.tgt().at(e)}, Bind(n.var, e)});
          }
        } else if constexpr (std::is_same_v<T, Pattern::BwdEdge>) {
          for (const auto& e : g.edges()) {
            out.insert({{g.tgt().at(e), e, g.src().at(e)}, Bind(n.var, e)});
          }
        } else if constexpr (std::is_same_v<T, Pattern::Alt>) {
          out = Paths(g, *n.left, bound, limit);
          for (auto& pm : Paths(g, *n.right, bound, limit)) out.insert(pm);
        } else if constexpr (std::is_same_v<T, Pattern::Concat>) {
          auto left = Paths(g, *n.left, bound, limit);
          auto right = Paths(g, *n.right, bound, limit);
          for (const auto& a : left) {
            for (const auto& b : right) {
              if (a.tgt() != b.src() || !Compatible(a.mu, b.mu)) continue;
              out.insert({Join(a.path, b.path), Merge(a.mu, b.mu)});
            }
            CheckLimit(out, limit);
          }
        } else if constexpr (std::is_same_v<T, Pattern::Filter>) {
          for (auto& pm : Paths(g, *n.body, bound, limit)) {
            if (EvalCondition(g, pm.mu, *n.cond)) out.insert(pm);
          }
        } else {
          std::vector<std::vector<Ident>> body;
          for (auto& pm : Paths(g, *n.body, bound, limit)) {
            body.push_back(pm.path);
          }
          std::sort(body.begin(), body.end());
          body.erase(std::unique(body.begin(), body.end()), body.end());
          size_t hi = n.hi ? *n.hi : bound;
          std::set<std::vector<Ident>> cur;
          for (const auto& v : g.nodes()) cur.insert({v});
          for (size_t i = 0; i <= hi; ++i) {
            if (i >= n.lo) {
              for (const auto& path : cur) out.insert({path, {}});
              CheckLimit(out, limit);
            }
            if (i == hi || cur.empty()) break;
            std::set<std::vector<Ident>> next;
            for (const auto& path : cur) {
              for (const auto& b : body) {
                if (b.front() == path.back()) next.insert(Join(path, b));
              }
              if (limit && next.size() > limit) {
                throw Error(ErrorCode::kPathLimit,
                            "more than " + std::to_string(limit) + " paths");
              }
            }
            cur = std::move(next);
          }
        }
      },
      p.node);
  CheckLimit(out, limit);
  return out;
}

size_t MaxLower(const Pattern& p) {
  return std::visit(
      [](const auto& n) -> size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Pattern::Concat> ||
                      std::is_same_v<T, Pattern::Alt>) {
          return std::max(MaxLower(*n.left), MaxLower(*n.right));
        } else if constexpr (std::is_same_v<T, Pattern::Repeat>) {
          return std::max(n.lo, MaxLower(*n.body));
        } else if constexpr (std::is_same_v<T, Pattern::Filter>) {
          return MaxLower(*n.body);
        } else {
          return 0;
        }
      },
      p.node);
}

}  // namespace

std::set<PathMatch> EvalPatternPaths(const PropertyGraph& g, const Pattern& p,
                                     size_t rep_bound, size_t path_limit) {
  return Paths(g, p, rep_bound, path_limit);
}

std::set<MatchTriple> ProjectEndpoints(const std::set<PathMatch>& s) {
  std::set<MatchTriple> out;
  for (const auto& pm : s) out.insert({pm.src(), pm.tgt(), pm.mu});
  return out;
}

size_t SufficientRepBound(const PropertyGraph& g, const Pattern& p) {
  return g.nodes().size() + MaxLower(p);
}

}  // namespace pgqlab
