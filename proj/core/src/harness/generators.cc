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

#include "pgqlab/harness/generators.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pgqlab/pattern_eval.h"

namespace pgqlab::harness {

uint64_t CaseSeed(uint64_t seed, size_t index) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

Ident NodeId(size_t i, size_t k) {
  Ident id{Value(static_cast<int64_t>(i + 1))};
  if (k >= 2) id.push_back(Value(static_cast<int64_t>(i % 2)));
  for (size_t j = 2; j < k; ++j) id.push_back(Value(0));
  return id;
}

Ident EdgeId(size_t j, size_t k) {
  Ident id{Value(static_cast<int64_t>(100 + j))};
  for (size_t i = 1; i < k; ++i) id.push_back(Value("e"));
  return id;
}

}  // namespace

PropertyGraph GenGraph(Rng& rng, const GraphParams& params) {
  const size_t k = rng.Range(1, std::max<size_t>(1, params.max_id_arity));
  const size_t n = rng.Range(1, std::max<size_t>(1, params.max_nodes));
  const size_t m = rng.Range(0, params.max_edges);
  ViewRelations rels = {Relation(k),         Relation(k),
                        Relation(2 * k),     Relation(2 * k),
                        Relation(k + 1),     Relation(k + 2)};
  std::vector<Ident> elements;
  for (size_t i = 0; i < n; ++i) {
    rels[0].Insert(NodeId(i, k));
    elements.push_back(NodeId(i, k));
  }
  for (size_t j = 0; j < m; ++j) {
    Ident e = EdgeId(j, k);
    rels[1].Insert(e);
    rels[2].Insert(Concat(e, NodeId(rng.Below(n), k)));
    rels[3].Insert(Concat(e, NodeId(rng.Below(n), k)));
    elements.push_back(e);
  }
  for (const auto& id : elements) {
    for (const auto& l : params.labels) {
      if (rng.Chance(0.4)) rels[4].Insert(Concat(id, {l}));
    }
    for (const auto& key : params.keys) {
      if (!params.values.empty() && rng.Chance(0.6)) {
        rels[5].Insert(Concat(id, {key, rng.Pick(params.values)}));
      }
    }
  }
  return PgView(rels);
}

namespace {

class PatternGen {
 public:
  PatternGen(Rng& rng, const PatternParams& p) : rng_(rng), p_(p) {}

  PatternPtr Top() {
    const size_t max_depth = std::max<size_t>(1, p_.max_depth);
    const size_t depth =
        rng_.Chance(0.5) ? max_depth : rng_.Range(1, max_depth);
    std::vector<std::string> all = AllVars();
    rng_.Shuffle(all);
    size_t max_vars = std::min<size_t>({3, Cap(depth), all.size()});
    all.resize(rng_.Chance(0.3) ? 0 : rng_.Range(0, max_vars));
    return Gen(depth, all, false);
  }

 private:
  static size_t Cap(size_t depth) { return size_t{1} << (depth - 1); }

  std::vector<std::string> AllVars() const {
    std::vector<std::string> v = p_.node_vars;
    v.insert(v.end(), p_.edge_vars.begin(), p_.edge_vars.end());
    return v;
  }

  bool IsEdgeVar(const std::string& v) const {
    return std::find(p_.edge_vars.begin(), p_.edge_vars.end(), v) !=
           p_.edge_vars.end();
  }

  PatternPtr Atom(const std::vector<std::string>& s) {
    if (s.empty()) {
      switch (rng_.Below(3)) {
        case 0: return MakeNode();
        case 1: return MakeFwdEdge();
        default: return MakeBwdEdge();
      }
    }
    if (!IsEdgeVar(s[0])) return MakeNode(s[0]);
    return rng_.Chance(0.5) ? MakeFwdEdge(s[0]) : MakeBwdEdge(s[0]);
  }

  PatternPtr Gen(size_t depth, const std::vector<std::string>& s,
                 bool in_unbounded, bool in_repeat = false) {
    if (depth <= 1) return Atom(s);
    const size_t sub = Cap(depth - 1);
    std::vector<int> ops;
    if (s.size() <= 1) ops.push_back(0);
    ops.push_back(1);
    ops.push_back(1);
    if (s.size() <= sub) ops.push_back(2);
    if (!s.empty() && s.size() <= sub) ops.push_back(3);
    if (s.empty() && !in_repeat) ops.insert(ops.end(), 4, 4);
    switch (rng_.Pick(ops)) {
      case 0:
        return Atom(s);
      case 1: {
        std::vector<std::string> l, r;
        for (size_t i = 0; i < s.size(); ++i) {
          const std::string& v = s[i];
          const size_t rest = s.size() - i - 1;
          const size_t room = 2 * sub - l.size() - r.size();
          std::vector<int> where;
          if (l.size() < sub && room - 1 >= rest) where.push_back(0);
          if (r.size() < sub && room - 1 >= rest) where.push_back(1);
          if (l.size() < sub && r.size() < sub && room - 2 >= rest) {
            where.push_back(2);
          }
          int w = rng_.Pick(where);
          if (w != 1) l.push_back(v);
          if (w != 0) r.push_back(v);
        }
        return MakeConcat(Gen(depth - 1, l, in_unbounded, in_repeat),
                          Gen(depth - 1, r, in_unbounded, in_repeat));
      }
      case 2:
        return MakeAlt(Gen(depth - 1, s, in_unbounded, in_repeat),
                       Gen(depth - 1, s, in_unbounded, in_repeat));
      case 3:
        return MakeFilter(Gen(depth - 1, s, in_unbounded, in_repeat),
                          Cond(s, 2));
      default: {
        std::vector<std::string> all = AllVars();
        rng_.Shuffle(all);
        all.resize(rng_.Range(0, std::min(sub, all.size())));
        size_t lo = rng_.Range(0, p_.max_lo);
        RepeatBound hi;
        bool unbounded = (p_.nested_unbounded || !in_unbounded) &&
                         rng_.Chance(p_.unbounded);
        if (!unbounded) hi = lo + rng_.Range(0, p_.max_span);
        return MakeRepeat(Gen(depth - 1, all, in_unbounded || unbounded,
                              !p_.nested_repeat),
                          lo, hi);
      }
    }
  }

  ConditionPtr Cond(const std::vector<std::string>& s, size_t depth) {
    if (depth == 0 || rng_.Chance(0.5)) {
      if (p_.keys.empty() || rng_.Chance(0.5)) {
        return MakeHasLabel(rng_.Pick(p_.labels), rng_.Pick(s));
      }
      return MakePropEq(rng_.Pick(s), rng_.Pick(p_.keys), rng_.Pick(s),
                        rng_.Pick(p_.keys));
    }
    switch (rng_.Below(3)) {
      case 0: return MakeCondNot(Cond(s, depth - 1));
      case 1: return MakeCondAnd(Cond(s, depth - 1), Cond(s, depth - 1));
      default: return MakeCondOr(Cond(s, depth - 1), Cond(s, depth - 1));
    }
  }

  Rng& rng_;
  const PatternParams& p_;
};

}  // namespace

PatternPtr GenPattern(Rng& rng, const PatternParams& params) {
  return PatternGen(rng, params).Top();
}

namespace {

const std::vector<Value> kPool = {1, 2, 3, 4, 5};

Value Int(size_t i) { return Value(static_cast<int64_t>(i)); }

struct BaseDb {
  Database db;
  std::vector<Value> nodes;
  Relation ed{3};
};

BaseDb GenBaseDb(Rng& rng) {
  BaseDb b;
  std::vector<Value> pool = kPool;
  rng.Shuffle(pool);
  size_t n = rng.Range(2, 4);
  b.nodes.assign(pool.begin(), pool.begin() + n);
  std::vector<Value> eids(pool.begin() + n, pool.end());
  Relation nd(1), lb(2), pr(3), u(1), r(2);
  for (const auto& v : b.nodes) nd.Insert({v});
  std::vector<Value> elements = b.nodes;
  for (const auto& e : eids) {
    if (!rng.Chance(0.7)) continue;
    b.ed.Insert({e, rng.Pick(b.nodes), rng.Pick(b.nodes)});
    elements.push_back(e);
  }
  // An occasional parallel pair, which makes multi-edge paths differ.
  for (const auto& id : elements) {
    for (int l : {1, 2}) {
      if (rng.Chance(0.4)) lb.Insert({id, Value(l)});
    }
    for (int key : {1, 2}) {
      if (rng.Chance(0.5)) pr.Insert({id, Value(key), rng.Pick(kPool)});
    }
  }
  for (const auto& v : kPool) {
    if (rng.Chance(0.5)) u.Insert({v});
  }
  for (size_t i = rng.Range(0, 6); i > 0; --i) {
    r.Insert({rng.Pick(kPool), rng.Pick(kPool)});
  }
  b.db.Put("Nd", std::move(nd));
  b.db.Put("Ed", b.ed);
  b.db.Put("Lb", std::move(lb));
  b.db.Put("Pr", std::move(pr));
  b.db.Put("U", std::move(u));
  b.db.Put("R", std::move(r));
  return b;
}

SelCondPtr RandomSel(Rng& rng, size_t arity) {
  SelCondPtr c = SelCond::Eq(rng.Range(1, arity), rng.Range(1, arity));
  return rng.Chance(0.3) ? SelCond::MakeNot(c) : c;
}

// Relational query of the given arity over U and R.
QueryPtr GenRA(Rng& rng, size_t arity, bool ro) {
  if (arity == 0) return MakeProject({}, MakeRel("U"));
  if (arity == 1) {
    switch (rng.Below(ro ? 3 : 4)) {
      case 0: return MakeRel("U");
      case 1: return MakeProject({1}, MakeRel("R"));
      case 2: return MakeProject({2}, MakeRel("R"));
      default: return MakeConst(rng.Pick(kPool));
    }
  }
  if (arity == 2 && rng.Chance(0.5)) return MakeRel("R");
  return MakeProduct(GenRA(rng, 1, ro), GenRA(rng, arity - 1, ro));
}

// Six subqueries of a unary view valid on every base database.
std::array<QueryPtr, 6> GenUnaryView(Rng& rng) {
  QueryPtr nq = MakeRel("Nd");
  QueryPtr ed = MakeRel("Ed");
  if (rng.Chance(0.3)) ed = MakeSelect(RandomSel(rng, 3), ed);
  QueryPtr eq = MakeProject({1}, ed);
  bool swap = rng.Chance(0.3);
  QueryPtr src = MakeProject({1, swap ? size_t{3} : size_t{2}}, ed);
  QueryPtr tgt = MakeProject({1, swap ? size_t{2} : size_t{3}}, ed);
  auto semijoin = [](QueryPtr rel, size_t arity, QueryPtr ids) {
    std::vector<size_t> cols;
    for (size_t i = 1; i <= arity; ++i) cols.push_back(i);
    return MakeProject(
        cols, MakeSelect(SelCond::Eq(1, arity + 1), MakeProduct(rel, ids)));
  };
  QueryPtr lab;
  switch (rng.Below(3)) {
    case 0:
      lab = MakeUnion(semijoin(MakeRel("Lb"), 2, nq),
                      semijoin(MakeRel("Lb"), 2, eq));
      break;
    case 1:
      lab = MakeProduct(rng.Chance(0.5) ? nq : eq, MakeConst(rng.Pick(kPool)));
      break;
    default:
      lab = MakeUnion(semijoin(MakeRel("Lb"), 2, nq),
                      MakeProduct(eq, MakeConst(Int(rng.Range(1, 2)))));
  }
  QueryPtr prop;
  switch (rng.Below(3)) {
    case 0:
      prop = MakeUnion(semijoin(MakeRel("Pr"), 3, nq),
                       semijoin(MakeRel("Pr"), 3, eq));
      break;
    case 1:
      prop = MakeProduct(MakeProduct(nq, MakeConst(Int(rng.Range(1, 2)))),
                         MakeConst(rng.Pick(kPool)));
      break;
    default:
      prop = MakeProject({1, 1, 1}, MakeSelect(SelCond::MakeNot(
                                                   SelCond::Eq(1, 1)),
                                               nq));
  }
  return {nq, eq, src, tgt, lab, prop};
}

// Pairs every identifier of a unary view with each value of w.
std::array<QueryPtr, 6> Widen(const std::array<QueryPtr, 6>& v, QueryPtr w) {
  return {MakeProduct(v[0], w),
          MakeProduct(v[1], w),
          MakeProject({1, 3, 2, 3}, MakeProduct(v[2], w)),
          MakeProject({1, 3, 2, 3}, MakeProduct(v[3], w)),
          MakeProject({1, 3, 2}, MakeProduct(v[4], w)),
          MakeProject({1, 4, 2, 3}, MakeProduct(v[5], w))};
}

OutputPattern GenOutput(Rng& rng, PatternPtr body) {
  std::set<std::string> schema = SchemaOf(*body);
  std::vector<std::string> vars(schema.begin(), schema.end());
  rng.Shuffle(vars);
  vars.resize(rng.Range(0, vars.size()));
  std::vector<OutputItem> omega;
  for (const auto& v : vars) omega.push_back({v, std::nullopt});
  if (!schema.empty() && rng.Chance(0.4)) {
    OutputItem item{*std::next(schema.begin(), rng.Below(schema.size())),
                    Value(static_cast<int64_t>(rng.Range(1, 2)))};
    omega.insert(omega.begin() + rng.Below(omega.size() + 1), item);
  }
  return {body, omega};
}

}  // namespace

PgqCase GenPgqCase(Rng& rng, FragmentClass::Kind kind) {
  BaseDb base = GenBaseDb(rng);
  PatternParams pp;
  pp.edge_vars = {"e"};
  pp.labels = {1, 2};
  pp.keys = {1, 2};
  pp.max_depth = 4;
  OutputPattern out = GenOutput(rng, GenPattern(rng, pp));
  size_t k = 1;
  QueryPtr match;
  if (kind == FragmentClass::kRO) {
    std::array<QueryPtr, 6> view = GenUnaryView(rng);
    const std::array<std::string, 6> names = {"VN", "VE", "VS",
                                              "VT", "VL", "VP"};
    for (size_t i = 0; i < 6; ++i) {
      base.db.Put(names[i], EvalQuery(base.db, *view[i]));
    }
    match = MakeMatchRO(out, names);
  } else if (kind == FragmentClass::kRW) {
    match = MakeMatchRW(out, GenUnaryView(rng));
  } else {
    std::array<QueryPtr, 6> view = GenUnaryView(rng);
    if (rng.Chance(0.7)) {
      k = 2;
      view = Widen(view, rng.Chance(0.5) ? MakeRel("U")
                                         : MakeConst(rng.Pick(kPool)));
    }
    std::optional<size_t> declared;
    if (rng.Chance(0.5)) declared = k;
    match = MakeMatchEXT(out, view, declared);
  }
  size_t arity = 0;
  for (const auto& item : out.omega) arity += item.key ? 1 : k;
  const bool ro = kind == FragmentClass::kRO;
  QueryPtr q = match;
  for (size_t steps = rng.Range(0, 2); steps > 0; --steps) {
    switch (rng.Below(4)) {
      case 0:
        if (arity > 0) {
          std::vector<size_t> idx;
          for (size_t n = rng.Range(1, std::min<size_t>(arity, 3)); n > 0;
               --n) {
            idx.push_back(rng.Range(1, arity));
          }
          q = MakeProject(idx, q);
          arity = idx.size();
        }
        break;
      case 1:
        if (arity > 0) q = MakeSelect(RandomSel(rng, arity), q);
        break;
      case 2:
        q = rng.Chance(0.5) ? MakeUnion(q, GenRA(rng, arity, ro))
                            : MakeDiff(q, GenRA(rng, arity, ro));
        break;
      default:
        q = MakeProduct(q, GenRA(rng, 1, ro));
        arity += 1;
    }
  }
  return {std::move(base.db), q};
}

namespace {

class FormulaGen {
 public:
  FormulaGen(Rng& rng, size_t max_k) : rng_(rng), max_k_(max_k) {}

  FormulaPtr Leaf(const std::vector<std::string>& pool) {
    switch (rng_.Below(5)) {
      case 0: return MakeAtom("U", {rng_.Pick(pool)});
      case 1:
      case 2: return MakeAtom("R", {rng_.Pick(pool), rng_.Pick(pool)});
      case 3: return MakeEq(rng_.Pick(pool), rng_.Pick(pool));
      default:
        return MakeEqConst(rng_.Pick(pool),
                           Value(static_cast<int64_t>(rng_.Range(1, 6))));
    }
  }

  FormulaPtr Gen(size_t depth, const std::vector<std::string>& pool) {
    if (depth == 0) return Leaf(pool);
    switch (rng_.Below(tc_budget_ > 0 ? 8 : 7)) {
      case 0: return Leaf(pool);
      case 1: return MakeFNot(Gen(depth - 1, pool));
      case 2: return MakeFAnd(Gen(depth - 1, pool), Gen(depth - 1, pool));
      case 3: return MakeFOr(Gen(depth - 1, pool), Gen(depth - 1, pool));
      case 4:
      case 5: {
        const auto& v = rng_.Pick(outer_);
        FormulaPtr body = Gen(depth - 1, pool);
        return rng_.Chance(0.6) ? MakeExists(v, body) : MakeForall(v, body);
      }
      default: {
        const size_t k = rng_.Range(1, max_k_);
        std::vector<std::string> x, y;
        for (size_t i = 0; i < k; ++i) {
          x.push_back(rng_.Pick(pool));
          y.push_back(rng_.Pick(pool));
        }
        return Tc(depth - 1, k, x, y, pool);
      }
    }
  }

  FormulaPtr Tc(size_t depth, size_t k, std::vector<std::string> x,
                std::vector<std::string> y,
                const std::vector<std::string>& params) {
    --tc_budget_;
    const std::string tag = std::to_string(tc_count_++);
    std::vector<std::string> u, v;
    for (size_t i = 1; i <= k; ++i) {
      u.push_back("u" + tag + "_" + std::to_string(i));
      v.push_back("v" + tag + "_" + std::to_string(i));
    }
    std::vector<std::string> pool = u;
    pool.insert(pool.end(), v.begin(), v.end());
    if (!params.empty() && rng_.Chance(0.5)) pool.push_back(rng_.Pick(params));
    FormulaPtr link = rng_.Chance(0.8) ? MakeAtom("R", {u[0], v[0]})
                                       : MakeAtom("R", {v[0], u[0]});
    if (k == 2) {
      FormulaPtr second;
      switch (rng_.Below(3)) {
        case 0: second = MakeEq(u[1], v[1]); break;
        case 1: second = MakeAtom("R", {u[1], v[1]}); break;
        default: second = MakeAtom("R", {v[1], u[1]});
      }
      link = MakeFAnd(link, second);
    }
    FormulaPtr body = link;
    if (rng_.Chance(0.6)) {
      FormulaPtr extra = Gen(std::min<size_t>(depth, 1), pool);
      body = rng_.Chance(0.5) ? MakeFAnd(body, extra) : MakeFOr(body, extra);
    }
    return MakeTC(u, v, body, x, y);
  }

  std::vector<std::string> outer_ = {"x", "y", "z"};
  size_t tc_budget_ = 2;

 private:
  Rng& rng_;
  size_t max_k_;
  size_t tc_count_ = 0;
};

Database GenFotcDb(Rng& rng) {
  Database db;
  Relation u(1), r(2);
  for (int v = 1; v <= 4; ++v) {
    if (rng.Chance(0.5)) u.Insert({Value(v)});
  }
  for (size_t i = rng.Range(0, 6); i > 0; --i) {
    r.Insert({Value(static_cast<int64_t>(rng.Range(1, 4))),
              Value(static_cast<int64_t>(rng.Range(1, 4)))});
  }
  db.Put("U", std::move(u));
  db.Put("R", std::move(r));
  return db;
}

}  // namespace

FotcCase GenFotcCase(Rng& rng, size_t max_tc_arity) {
  FotcCase c;
  c.db = GenFotcDb(rng);
  FormulaGen gen(rng, std::max<size_t>(1, max_tc_arity));
  if (max_tc_arity == 0) gen.tc_budget_ = 0;
  c.formula = gen.Gen(rng.Range(1, 3), gen.outer_);
  c.order = FreeVarsOrdered(*c.formula);
  rng.Shuffle(c.order);
  return c;
}

FotcCase GenTcCase(Rng& rng, size_t max_tc_arity) {
  FotcCase c;
  c.db = GenFotcDb(rng);
  FormulaGen gen(rng, std::max<size_t>(1, max_tc_arity));
  gen.tc_budget_ = 1;
  const size_t k = rng.Range(1, std::max<size_t>(1, max_tc_arity));
  std::vector<std::string> x, y;
  for (size_t i = 1; i <= k; ++i) {
    x.push_back("x" + std::to_string(i));
    y.push_back("y" + std::to_string(i));
  }
  std::vector<std::string> params;
  if (rng.Chance(0.4)) params.push_back("p");
  c.formula = gen.Tc(rng.Range(0, 2), k, x, y, params);
  c.order = FreeVarsOrdered(*c.formula);
  return c;
}

ViewRelations GenViewBundle(Rng& rng, bool mutate) {
  const size_t k = rng.Range(1, 2);
  auto id = [k](int64_t i) {
    Ident t{Value(i)};
    if (k == 2) t.push_back(Value(i % 2));
    return t;
  };
  ViewRelations r = {Relation(k),     Relation(k),     Relation(2 * k),
                     Relation(2 * k), Relation(k + 1), Relation(k + 2)};
  const size_t n = rng.Range(1, 4), m = rng.Range(0, 3);
  std::vector<Ident> nodes, elements;
  for (size_t i = 1; i <= n; ++i) nodes.push_back(id(static_cast<int64_t>(i)));
  for (const auto& v : nodes) r[0].Insert(v);
  elements = nodes;
  for (size_t j = 0; j < m; ++j) {
    Ident e = id(static_cast<int64_t>(10 + j));
    r[1].Insert(e);
    r[2].Insert(Concat(e, rng.Pick(nodes)));
    r[3].Insert(Concat(e, rng.Pick(nodes)));
    elements.push_back(e);
  }
  for (const auto& el : elements) {
    if (rng.Chance(0.5)) r[4].Insert(Concat(el, {Value("L")}));
    if (rng.Chance(0.5)) {
      r[5].Insert(Concat(el, {Value("k"), Value(static_cast<int64_t>(
                                              rng.Range(1, 3)))}));
    }
  }
  if (!mutate) return r;

  const Ident stranger = id(99);
  if (rng.Chance(0.3)) {
    Ident v = rng.Pick(nodes);
    r[1].Insert(v);
    if (rng.Chance(0.5)) {
      r[2].Insert(Concat(v, rng.Pick(nodes)));
      r[3].Insert(Concat(v, rng.Pick(nodes)));
    }
  }
  if (rng.Chance(0.3)) {
    size_t which = rng.Range(2, 3);
    switch (rng.Below(3)) {
      case 0:
        if (!r[which].empty()) {
          Relation cut(2 * k);
          auto rows = r[which].rows();
          rows.erase(std::next(rows.begin(), rng.Below(rows.size())));
          for (const auto& t : rows) cut.Insert(t);
          r[which] = cut;
        }
        break;
      case 1:
        if (!r[1].empty()) {
          Ident e = *std::next(r[1].rows().begin(), rng.Below(r[1].size()));
          r[which].Insert(Concat(e, stranger));
        }
        break;
      default:
        r[which].Insert(Concat(stranger, rng.Pick(nodes)));
    }
  }
  if (rng.Chance(0.3)) r[4].Insert(Concat(stranger, {Value("L")}));
  if (rng.Chance(0.3)) {
    if (rng.Chance(0.5)) {
      r[5].Insert(Concat(stranger, {Value("k"), Value(1)}));
    } else {
      Ident el = rng.Pick(elements);
      r[5].Insert(Concat(el, {Value("k"), Value(7)}));
      r[5].Insert(Concat(el, {Value("k"), Value(8)}));
    }
  }
  if (rng.Chance(0.2)) {
    size_t which = rng.Below(6);
    Relation wide(r[which].arity() + 1);
    for (const auto& t : r[which].rows()) wide.Insert(Concat(t, {Value(1)}));
    r[which] = wide;
  }
  return r;
}

Database GenColoredDb(Rng& rng) {
  Relation red(1), blue(1), edges(1), source(2), target(2);
  std::vector<Value> reds, blues;
  for (size_t i = 1, n = rng.Range(2, 7); i <= n; ++i) {
    Value v(static_cast<int64_t>(i));
    if (rng.Chance(0.5)) {
      red.Insert({v});
      reds.push_back(v);
    } else {
      blue.Insert({v});
      blues.push_back(v);
    }
  }
  std::vector<Value> all = reds;
  all.insert(all.end(), blues.begin(), blues.end());
  const bool both = !reds.empty() && !blues.empty();
  for (size_t j = 0, m = rng.Range(0, 8); j < m; ++j) {
    Value e(static_cast<int64_t>(100 + j));
    Value a = rng.Pick(all), b = rng.Pick(all);
    if (both && rng.Chance(0.75)) {
      a = rng.Pick(reds);
      b = rng.Pick(blues);
      if (rng.Chance(0.5)) std::swap(a, b);
    }
    edges.Insert({e});
    source.Insert({e, a});
    target.Insert({e, b});
  }
  Database db;
  db.Put("RedNodes", std::move(red));
  db.Put("BlueNodes", std::move(blue));
  db.Put("Edges", std::move(edges));
  db.Put("Source", std::move(source));
  db.Put("Target", std::move(target));
  return db;
}

Database GenWeightedDb(Rng& rng) {
  std::vector<Tuple> all;
  for (int b = 1; b <= 2; ++b) {
    for (int br = 1; br <= 2; ++br) {
      for (int a = 1; a <= 3; ++a) all.push_back({b, br, a});
    }
  }
  rng.Shuffle(all);
  all.resize(rng.Range(2, 5));
  Relation account(3), transfer(9), lt(2);
  for (const auto& t : all) account.Insert(t);
  std::set<int64_t> amounts = {0};
  for (size_t j = 1, m = rng.Range(0, 7); j <= m; ++j) {
    const Tuple& s = rng.Pick(all);
    const Tuple& t = rng.Pick(all);
    int64_t amount = 10 * static_cast<int64_t>(rng.Range(1, 6));
    amounts.insert(amount);
    Tuple row{Value(static_cast<int64_t>(j))};
    row.insert(row.end(), s.begin(), s.end());
    row.insert(row.end(), t.begin(), t.end());
    row.push_back(Value(static_cast<int64_t>(j)));
    row.push_back(Value(amount));
    transfer.Insert(row);
  }
  for (int64_t a : amounts) {
    for (int64_t b : amounts) {
      if (a < b) lt.Insert({Value(a), Value(b)});
    }
  }
  Database db;
  db.Put("Account", std::move(account));
  db.Put("Transfer", std::move(transfer));
  db.Put("Lt", std::move(lt));
  return db;
}

}  // namespace pgqlab::harness
