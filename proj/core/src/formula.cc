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

#include "pgqlab/formula.h"

#include <algorithm>
#include <deque>

#include "pgqlab/error.h"

namespace pgqlab {

FormulaPtr MakeAtom(std::string rel, std::vector<std::string> vars) {
  return std::make_shared<Formula>(
      Formula{Formula::Atom{std::move(rel), std::move(vars)}});
}
FormulaPtr MakeEq(std::string x, std::string y) {
  return std::make_shared<Formula>(
      Formula{Formula::Eq{std::move(x), std::move(y)}});
}
FormulaPtr MakeEqConst(std::string x, Value c) {
  return std::make_shared<Formula>(
      Formula{Formula::EqConst{std::move(x), std::move(c)}});
}
FormulaPtr MakeFNot(FormulaPtr f) {
  return std::make_shared<Formula>(Formula{Formula::Not{std::move(f)}});
}
FormulaPtr MakeFAnd(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(
      Formula{Formula::And{std::move(a), std::move(b)}});
}
FormulaPtr MakeFOr(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(
      Formula{Formula::Or{std::move(a), std::move(b)}});
}
FormulaPtr MakeExists(std::string var, FormulaPtr body) {
  return std::make_shared<Formula>(
      Formula{Formula::Exists{std::move(var), std::move(body)}});
}
FormulaPtr MakeForall(std::string var, FormulaPtr body) {
  return std::make_shared<Formula>(
      Formula{Formula::Forall{std::move(var), std::move(body)}});
}

FormulaPtr MakeTC(std::vector<std::string> u, std::vector<std::string> v,
                  FormulaPtr body, std::vector<std::string> x,
                  std::vector<std::string> y) {
  size_t k = u.size();
  if (k == 0 || v.size() != k || x.size() != k || y.size() != k) {
    throw Error(ErrorCode::kStaticError,
                "TC needs four variable lists of one nonzero length");
  }
  std::set<std::string> uv(u.begin(), u.end());
  uv.insert(v.begin(), v.end());
  if (uv.size() != 2 * k) {
    throw Error(ErrorCode::kStaticError,
                "TC closure variables must be pairwise distinct");
  }
  return std::make_shared<Formula>(Formula{Formula::TC{
      std::move(u), std::move(v), std::move(body), std::move(x),
      std::move(y)}});
}

FormulaPtr MakeFAndAll(const std::vector<FormulaPtr>& fs) {
  FormulaPtr out = fs.at(0);
  for (size_t i = 1; i < fs.size(); ++i) out = MakeFAnd(out, fs[i]);
  return out;
}

FormulaPtr MakeExistsAll(const std::vector<std::string>& vars, FormulaPtr f) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    f = MakeExists(*it, std::move(f));
  }
  return f;
}

namespace {

void AddOrdered(std::vector<std::string>& out, std::set<std::string>& seen,
                const std::string& v, const std::set<std::string>& bound) {
  if (bound.count(v)) return;
  if (seen.insert(v).second) out.push_back(v);
}

void Ordered(const Formula& f, std::set<std::string> bound,
             std::vector<std::string>& out, std::set<std::string>& seen) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          for (const auto& v : n.vars) AddOrdered(out, seen, v, bound);
        } else if constexpr (std::is_same_v<T, Formula::Eq>) {
          AddOrdered(out, seen, n.left, bound);
          AddOrdered(out, seen, n.right, bound);
        } else if constexpr (std::is_same_v<T, Formula::EqConst>) {
          AddOrdered(out, seen, n.var, bound);
        } else if constexpr (std::is_same_v<T, Formula::Not>) {
          Ordered(*n.inner, bound, out, seen);
        } else if constexpr (std::is_same_v<T, Formula::And> ||
                             std::is_same_v<T, Formula::Or>) {
          Ordered(*n.left, bound, out, seen);
          Ordered(*n.right, bound, out, seen);
        } else if constexpr (std::is_same_v<T, Formula::Exists> ||
                             std::is_same_v<T, Formula::Forall>) {
          bound.insert(n.var);
          Ordered(*n.body, bound, out, seen);
        } else {
          std::set<std::string> inner = bound;
          inner.insert(n.u.begin(), n.u.end());
          inner.insert(n.v.begin(), n.v.end());
          Ordered(*n.body, inner, out, seen);
          for (const auto& v : n.x) AddOrdered(out, seen, v, bound);
          for (const auto& v : n.y) AddOrdered(out, seen, v, bound);
        }
      },
      f.node);
}

template <typename Fn>
void ForEachChild(const Formula& f, Fn&& fn) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Not>) {
          fn(*n.inner);
        } else if constexpr (std::is_same_v<T, Formula::And> ||
                             std::is_same_v<T, Formula::Or>) {
          fn(*n.left);
          fn(*n.right);
        } else if constexpr (std::is_same_v<T, Formula::Exists> ||
                             std::is_same_v<T, Formula::Forall> ||
                             std::is_same_v<T, Formula::TC>) {
          fn(*n.body);
        }
      },
      f.node);
}

}  // namespace

std::vector<std::string> FreeVarsOrdered(const Formula& f) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  Ordered(f, {}, out, seen);
  return out;
}

std::set<std::string> FreeVars(const Formula& f) {
  auto v = FreeVarsOrdered(f);
  return {v.begin(), v.end()};
}

std::set<std::string> AllVars(const Formula& f) {
  std::set<std::string> out;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          out.insert(n.vars.begin(), n.vars.end());
        } else if constexpr (std::is_same_v<T, Formula::Eq>) {
          out.insert(n.left);
          out.insert(n.right);
        } else if constexpr (std::is_same_v<T, Formula::EqConst>) {
          out.insert(n.var);
        } else if constexpr (std::is_same_v<T, Formula::Exists> ||
                             std::is_same_v<T, Formula::Forall>) {
          out.insert(n.var);
        } else if constexpr (std::is_same_v<T, Formula::TC>) {
          for (const auto* list : {&n.u, &n.v, &n.x, &n.y}) {
            out.insert(list->begin(), list->end());
          }
        }
      },
      f.node);
  ForEachChild(f, [&](const Formula& c) {
    auto sub = AllVars(c);
    out.insert(sub.begin(), sub.end());
  });
  return out;
}

std::set<Value> ConstantsOf(const Formula& f) {
  std::set<Value> out;
  if (auto* c = std::get_if<Formula::EqConst>(&f.node)) out.insert(c->value);
  ForEachChild(f, [&](const Formula& c) {
    auto sub = ConstantsOf(c);
    out.insert(sub.begin(), sub.end());
  });
  return out;
}

std::set<std::string> RelationsOf(const Formula& f) {
  std::set<std::string> out;
  if (auto* a = std::get_if<Formula::Atom>(&f.node)) out.insert(a->rel);
  ForEachChild(f, [&](const Formula& c) {
    auto sub = RelationsOf(c);
    out.insert(sub.begin(), sub.end());
  });
  return out;
}

size_t TcArity(const Formula& f) {
  size_t out = 0;
  if (auto* tc = std::get_if<Formula::TC>(&f.node)) out = tc->u.size();
  ForEachChild(f, [&](const Formula& c) { out = std::max(out, TcArity(c)); });
  return out;
}

size_t FormulaSize(const Formula& f) {
  size_t out = 1;
  ForEachChild(f, [&](const Formula& c) { out += FormulaSize(c); });
  return out;
}

std::vector<std::string> TcParams(const Formula::TC& tc) {
  std::set<std::string> uv(tc.u.begin(), tc.u.end());
  uv.insert(tc.v.begin(), tc.v.end());
  std::vector<std::string> out;
  for (const auto& v : FreeVarsOrdered(*tc.body)) {
    if (!uv.count(v)) out.push_back(v);
  }
  return out;
}

std::set<Value> EvalDomain(const Database& db, const Formula& f) {
  std::set<Value> dom = ActiveDomain(db);
  auto consts = ConstantsOf(f);
  dom.insert(consts.begin(), consts.end());
  return dom;
}

namespace {

// Calls fn on every tuple of dom^n.
template <typename Fn>
void ForEachTuple(const std::vector<Value>& dom, size_t n, Fn&& fn) {
  if (n > 0 && dom.empty()) return;
  std::vector<size_t> idx(n, 0);
  Tuple t(n);
  for (;;) {
    for (size_t i = 0; i < n; ++i) t[i] = dom[idx[i]];
    fn(t);
    size_t i = n;
    while (i > 0) {
      --i;
      if (++idx[i] < dom.size()) break;
      idx[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

const Value& Get(const Assignment& a, const std::string& v) {
  auto it = a.find(v);
  if (it == a.end()) {
    throw Error(ErrorCode::kUnboundVariable, "variable '" + v + "' is unbound");
  }
  return it->second;
}

Tuple GetAll(const Assignment& a, const std::vector<std::string>& vars) {
  Tuple t;
  for (const auto& v : vars) t.push_back(Get(a, v));
  return t;
}

// Pointwise evaluator: quantifiers loop over the domain, TC searches
// breadth-first from x.
struct Pointwise {
  const Database& db;
  std::vector<Value> dom;

  bool Eval(const Formula& f, const Assignment& a) const {
    return std::visit(
        [&](const auto& n) -> bool {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Formula::Atom>) {
            const Relation& r = db.Get(n.rel);
            if (r.arity() != n.vars.size()) {
              throw Error(ErrorCode::kArityMismatch,
                          "atom " + n.rel + " used with " +
                              std::to_string(n.vars.size()) + " variables");
            }
            return r.contains(GetAll(a, n.vars));
          } else if constexpr (std::is_same_v<T, Formula::Eq>) {
            return Get(a, n.left) == Get(a, n.right);
          } else if constexpr (std::is_same_v<T, Formula::EqConst>) {
            return Get(a, n.var) == n.value;
          } else if constexpr (std::is_same_v<T, Formula::Not>) {
            return !Eval(*n.inner, a);
          } else if constexpr (std::is_same_v<T, Formula::And>) {
            return Eval(*n.left, a) && Eval(*n.right, a);
          } else if constexpr (std::is_same_v<T, Formula::Or>) {
            return Eval(*n.left, a) || Eval(*n.right, a);
          } else if constexpr (std::is_same_v<T, Formula::Exists>) {
            Assignment b = a;
            for (const auto& d : dom) {
              b[n.var] = d;
              if (Eval(*n.body, b)) return true;
            }
            return false;
          } else if constexpr (std::is_same_v<T, Formula::Forall>) {
            Assignment b = a;
            for (const auto& d : dom) {
              b[n.var] = d;
              if (!Eval(*n.body, b)) return false;
            }
            return true;
          } else {
            Tuple from = GetAll(a, n.x);
            Tuple to = GetAll(a, n.y);
            if (from == to) return true;
            const size_t k = n.u.size();
            std::set<Tuple> seen{from};
            std::deque<Tuple> queue{from};
            Assignment b = a;
            while (!queue.empty()) {
              Tuple cur = queue.front();
              queue.pop_front();
              for (size_t i = 0; i < k; ++i) b[n.u[i]] = cur[i];
              bool found = false;
              ForEachTuple(dom, k, [&](const Tuple& next) {
                if (found || seen.count(next)) return;
                for (size_t i = 0; i < k; ++i) b[n.v[i]] = next[i];
                if (!Eval(*n.body, b)) return;
                if (next == to) found = true;
                seen.insert(next);
                queue.push_back(next);
              });
              if (found) return true;
            }
            return false;
          }
        },
        f.node);
  }
};

// A relation whose columns are named by distinct variables, kept sorted.
struct Table {
  std::vector<std::string> cols;
  std::set<Tuple> rows;
};

size_t ColIndex(const Table& t, const std::string& v) {
  return std::lower_bound(t.cols.begin(), t.cols.end(), v) - t.cols.begin();
}

struct Algebra {
  const Database& db;
  std::vector<Value> dom;

  Table All(const std::vector<std::string>& cols) const {
    Table t{cols, {}};
    ForEachTuple(dom, cols.size(), [&](const Tuple& row) { t.rows.insert(row); });
    return t;
  }

  // Adds the missing columns of cols, ranging over the whole domain.
  Table Extend(const Table& t, const std::vector<std::string>& cols) const {
    std::vector<std::string> extra;
    for (const auto& c : cols) {
      if (!std::binary_search(t.cols.begin(), t.cols.end(), c)) {
        extra.push_back(c);
      }
    }
    if (extra.empty()) return t;
    return Join(t, All(extra));
  }

  Table Join(const Table& a, const Table& b) const {
    std::vector<std::string> cols;
    std::set_union(a.cols.begin(), a.cols.end(), b.cols.begin(), b.cols.end(),
                   std::back_inserter(cols));
    std::vector<std::string> common;
    std::set_intersection(a.cols.begin(), a.cols.end(), b.cols.begin(),
                          b.cols.end(), std::back_inserter(common));
    auto key = [&](const Table& t, const Tuple& row) {
      Tuple k;
      for (const auto& c : common) k.push_back(row[ColIndex(t, c)]);
      return k;
    };
    std::map<Tuple, std::vector<const Tuple*>> index;
    for (const auto& row : b.rows) index[key(b, row)].push_back(&row);
    Table out{cols, {}};
    for (const auto& ra : a.rows) {
      auto it = index.find(key(a, ra));
      if (it == index.end()) continue;
      for (const Tuple* rb : it->second) {
        Tuple row;
        for (const auto& c : cols) {
          if (std::binary_search(a.cols.begin(), a.cols.end(), c)) {
            row.push_back(ra[ColIndex(a, c)]);
          } else {
            row.push_back((*rb)[ColIndex(b, c)]);
          }
        }
        out.rows.insert(std::move(row));
      }
    }
    return out;
  }

  Table Complement(const Table& t) const {
    Table out{t.cols, {}};
    ForEachTuple(dom, t.cols.size(), [&](const Tuple& row) {
      if (!t.rows.count(row)) out.rows.insert(row);
    });
    return out;
  }

  Table DropColumn(const Table& t, const std::string& v) const {
    size_t i = ColIndex(t, v);
    Table out{t.cols, {}};
    out.cols.erase(out.cols.begin() + i);
    for (const auto& row : t.rows) {
      Tuple r = row;
      r.erase(r.begin() + i);
      out.rows.insert(std::move(r));
    }
    return out;
  }

  Table ExistsOf(const Table& t, const std::string& v) const {
    return DropColumn(Extend(t, {v}), v);
  }

  // Rows over the distinct variables of slots, from value tuples laid out
  // slot by slot; rows that give one variable two values are dropped.
  static void AddSlotted(Table& out, const std::vector<std::string>& slots,
                         const Tuple& values) {
    Tuple row(out.cols.size());
    std::vector<bool> set(out.cols.size(), false);
    for (size_t i = 0; i < slots.size(); ++i) {
      size_t c = ColIndex(out, slots[i]);
      if (set[c] && row[c] != values[i]) return;
      row[c] = values[i];
      set[c] = true;
    }
    out.rows.insert(std::move(row));
  }

  static std::vector<std::string> Sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }

  Table Eval(const Formula& f) const {
    return std::visit(
        [&](const auto& n) -> Table {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Formula::Atom>) {
            const Relation& r = db.Get(n.rel);
            if (r.arity() != n.vars.size()) {
              throw Error(ErrorCode::kArityMismatch,
                          "atom " + n.rel + " used with " +
                              std::to_string(n.vars.size()) + " variables");
            }
            Table out{Sorted(n.vars), {}};
            for (const auto& row : r.rows()) AddSlotted(out, n.vars, row);
            return out;
          } else if constexpr (std::is_same_v<T, Formula::Eq>) {
            Table out{Sorted({n.left, n.right}), {}};
            for (const auto& d : dom) {
              AddSlotted(out, {n.left, n.right}, {d, d});
            }
            return out;
          } else if constexpr (std::is_same_v<T, Formula::EqConst>) {
            return Table{{n.var}, {{n.value}}};
          } else if constexpr (std::is_same_v<T, Formula::Not>) {
            return Complement(Eval(*n.inner));
          } else if constexpr (std::is_same_v<T, Formula::And>) {
            return Join(Eval(*n.left), Eval(*n.right));
          } else if constexpr (std::is_same_v<T, Formula::Or>) {
            Table a = Eval(*n.left);
            Table b = Eval(*n.right);
            std::vector<std::string> cols;
            std::set_union(a.cols.begin(), a.cols.end(), b.cols.begin(),
                           b.cols.end(), std::back_inserter(cols));
            Table out = Extend(a, cols);
            Table eb = Extend(b, cols);
            out.rows.insert(eb.rows.begin(), eb.rows.end());
            return out;
          } else if constexpr (std::is_same_v<T, Formula::Exists>) {
            return ExistsOf(Eval(*n.body), n.var);
          } else if constexpr (std::is_same_v<T, Formula::Forall>) {
            return Complement(ExistsOf(Complement(Eval(*n.body)), n.var));
          } else {
            return EvalTC(n);
          }
        },
        f.node);
  }

  Table EvalTC(const Formula::TC& n) const {
    const size_t k = n.u.size();
    std::vector<std::string> params = TcParams(n);
    std::vector<std::string> slots = n.u;
    slots.insert(slots.end(), n.v.begin(), n.v.end());
    slots.insert(slots.end(), params.begin(), params.end());
    Table body = Extend(Eval(*n.body), Sorted(slots));

    std::map<Tuple, std::map<Tuple, std::set<Tuple>>> graph;
    for (const auto& row : body.rows) {
      Tuple u, v, p;
      for (size_t i = 0; i < slots.size(); ++i) {
        const Value& val = row[ColIndex(body, slots[i])];
        (i < k ? u : i < 2 * k ? v : p).push_back(val);
      }
      graph[p][u].insert(v);
    }

    std::vector<std::string> out_slots = n.x;
    out_slots.insert(out_slots.end(), n.y.begin(), n.y.end());
    out_slots.insert(out_slots.end(), params.begin(), params.end());
    Table out{Sorted(out_slots), {}};

    for (const auto& [p, adj] : graph) {
      for (const auto& [start, unused] : adj) {
        std::set<Tuple> seen;
        std::deque<Tuple> queue{start};
        while (!queue.empty()) {
          Tuple cur = queue.front();
          queue.pop_front();
          auto it = adj.find(cur);
          if (it == adj.end()) continue;
          for (const auto& nxt : it->second) {
            if (seen.insert(nxt).second) queue.push_back(nxt);
          }
        }
        for (const auto& end : seen) {
          AddSlotted(out, out_slots, Concat(Concat(start, end), p));
        }
      }
    }
    ForEachTuple(dom, k + params.size(), [&](const Tuple& t) {
      Tuple a(t.begin(), t.begin() + k);
      Tuple p(t.begin() + k, t.end());
      AddSlotted(out, out_slots, Concat(Concat(a, a), p));
    });
    return out;
  }
};

std::vector<Value> DomainVector(const Database& db, const Formula& f) {
  auto dom = EvalDomain(db, f);
  return {dom.begin(), dom.end()};
}

}  // namespace

bool EvalFormula(const Database& db, const Formula& f, const Assignment& a) {
  return Pointwise{db, DomainVector(db, f)}.Eval(f, a);
}

Relation EvalFormulaRel(const Database& db, const Formula& f,
                        const std::vector<std::string>& var_order) {
  std::set<std::string> order(var_order.begin(), var_order.end());
  if (order.size() != var_order.size() || order != FreeVars(f)) {
    std::string want;
    for (const auto& v : FreeVarsOrdered(f)) want += (want.empty() ? "" : ",") + v;
    throw Error(ErrorCode::kVarOrderMismatch,
                "variable order must list the free variables {" + want +
                    "} once each");
  }
  Algebra alg{db, DomainVector(db, f)};
  Table t = alg.Eval(f);
  Relation out(var_order.size());
  for (const auto& row : t.rows) {
    Tuple r;
    for (const auto& v : var_order) r.push_back(row[ColIndex(t, v)]);
    out.Insert(std::move(r));
  }
  return out;
}

}  // namespace pgqlab
