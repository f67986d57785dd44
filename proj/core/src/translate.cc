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

#include "pgqlab/translate.h"

#include <algorithm>

#include "pgqlab/error.h"

namespace pgqlab {

std::string FreshNamer::Fresh(std::string_view hint) {
  std::string base(hint.empty() ? "v" : hint);
  for (;;) {
    std::string name = base + "_" + std::to_string(counter_++);
    if (used_.insert(name).second) return name;
  }
}

std::vector<std::string> FreshNamer::FreshList(size_t n, std::string_view hint) {
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) out.push_back(Fresh(hint));
  return out;
}

std::string_view TcStrategyName(TcStrategy s) {
  return s == TcStrategy::kParamIterate ? "iterate" : "embed";
}

namespace {

using NameMap = std::map<std::string, std::string>;

std::string Mapped(const NameMap& env, const std::string& v) {
  auto it = env.find(v);
  return it == env.end() ? v : it->second;
}

std::vector<std::string> MappedAll(const NameMap& env,
                                   const std::vector<std::string>& vs) {
  std::vector<std::string> out;
  for (const auto& v : vs) out.push_back(Mapped(env, v));
  return out;
}

FormulaPtr Rename(const Formula& f, const NameMap& env, FreshNamer& namer) {
  return std::visit(
      [&](const auto& n) -> FormulaPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Formula::Atom>) {
          return MakeAtom(n.rel, MappedAll(env, n.vars));
        } else if constexpr (std::is_same_v<T, Formula::Eq>) {
          return MakeEq(Mapped(env, n.left), Mapped(env, n.right));
        } else if constexpr (std::is_same_v<T, Formula::EqConst>) {
          return MakeEqConst(Mapped(env, n.var), n.value);
        } else if constexpr (std::is_same_v<T, Formula::Not>) {
          return MakeFNot(Rename(*n.inner, env, namer));
        } else if constexpr (std::is_same_v<T, Formula::And>) {
          return MakeFAnd(Rename(*n.left, env, namer),
                          Rename(*n.right, env, namer));
        } else if constexpr (std::is_same_v<T, Formula::Or>) {
          return MakeFOr(Rename(*n.left, env, namer),
                         Rename(*n.right, env, namer));
        } else if constexpr (std::is_same_v<T, Formula::Exists> ||
                             std::is_same_v<T, Formula::Forall>) {
          NameMap inner = env;
          std::string v = namer.Fresh();
          inner[n.var] = v;
          FormulaPtr body = Rename(*n.body, inner, namer);
          if constexpr (std::is_same_v<T, Formula::Exists>) {
            return MakeExists(v, body);
          } else {
            return MakeForall(v, body);
          }
        } else {
          NameMap inner = env;
          std::vector<std::string> u, v;
          for (const auto& a : n.u) u.push_back(inner[a] = namer.Fresh());
          for (const auto& a : n.v) v.push_back(inner[a] = namer.Fresh());
          return MakeTC(u, v, Rename(*n.body, inner, namer),
                        MappedAll(env, n.x), MappedAll(env, n.y));
        }
      },
      f.node);
}

std::vector<std::string> Cat(std::vector<std::string> a,
                             const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

FormulaPtr EqVec(const std::vector<std::string>& a,
                 const std::vector<std::string>& b) {
  std::vector<FormulaPtr> parts;
  for (size_t i = 0; i < a.size(); ++i) parts.push_back(MakeEq(a[i], b[i]));
  return MakeFAndAll(parts);
}

struct ViewAtoms {
  const ViewFormulas& view;
  FreshNamer& namer;

  FormulaPtr Apply(size_t i, const std::vector<std::string>& args) const {
    return Instantiate(view.rels[i], args, namer);
  }
  FormulaPtr N(const std::vector<std::string>& n) const { return Apply(0, n); }
  FormulaPtr E(const std::vector<std::string>& e) const { return Apply(1, e); }
  FormulaPtr Src(const std::vector<std::string>& e,
                 const std::vector<std::string>& n) const {
    return Apply(2, Cat(e, n));
  }
  FormulaPtr Tgt(const std::vector<std::string>& e,
                 const std::vector<std::string>& n) const {
    return Apply(3, Cat(e, n));
  }
  FormulaPtr Lab(const std::vector<std::string>& x, const std::string& l) const {
    return Apply(4, Cat(x, {l}));
  }
  FormulaPtr Prop(const std::vector<std::string>& x, const std::string& key,
                  const std::string& val) const {
    return Apply(5, Cat(x, {key, val}));
  }
};

const std::vector<std::string>& EnvOf(const VarEnv& env, const std::string& v) {
  auto it = env.find(v);
  if (it == env.end()) {
    throw Error(ErrorCode::kUnboundVariable,
                "pattern variable '" + v + "' has no formula variables");
  }
  return it->second;
}

struct PatternXlate {
  ViewAtoms atoms;
  FreshNamer& namer;
  size_t k;

  FormulaPtr Tau(const Pattern& p, const std::vector<std::string>& src,
                 const std::vector<std::string>& tgt, const VarEnv& env) {
    return std::visit(
        [&](const auto& n) -> FormulaPtr {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Pattern::Node>) {
            if (n.var.empty()) {
              return MakeFAnd(atoms.N(src), EqVec(src, tgt));
            }
            const auto& x = EnvOf(env, n.var);
            return MakeFAndAll({atoms.N(x), EqVec(x, src), EqVec(src, tgt)});
          } else if constexpr (std::is_same_v<T, Pattern::FwdEdge> ||
                               std::is_same_v<T, Pattern::BwdEdge>) {
            constexpr bool fwd = std::is_same_v<T, Pattern::FwdEdge>;
            std::vector<std::string> e =
                n.var.empty() ? namer.FreshList(k, "e") : EnvOf(env, n.var);
            FormulaPtr f = MakeFAndAll({atoms.E(e), atoms.Src(e, fwd ? src : tgt),
                                        atoms.Tgt(e, fwd ? tgt : src)});
            return n.var.empty() ? MakeExistsAll(e, f) : f;
          } else if constexpr (std::is_same_v<T, Pattern::Concat>) {
            auto m = namer.FreshList(k, "m");
            return MakeExistsAll(
                m, MakeFAnd(Tau(*n.left, src, m, env), Tau(*n.right, m, tgt, env)));
          } else if constexpr (std::is_same_v<T, Pattern::Alt>) {
            return MakeFOr(Tau(*n.left, src, tgt, env),
                           Tau(*n.right, src, tgt, env));
          } else if constexpr (std::is_same_v<T, Pattern::Filter>) {
            return MakeFAnd(Tau(*n.body, src, tgt, env),
                            CondToFotc(*n.cond, atoms.view, env, namer));
          } else {
            return Repeat(n, src, tgt);
          }
        },
        p.node);
  }

  // One iteration of a repetition body; its variables stay local.
  FormulaPtr Iter(const Pattern& body, const std::vector<std::string>& a,
                  const std::vector<std::string>& b) {
    VarEnv local;
    std::vector<std::string> bound;
    for (const auto& v : SchemaOf(body)) {
      local[v] = namer.FreshList(k, v);
      bound.insert(bound.end(), local[v].begin(), local[v].end());
    }
    return MakeExistsAll(bound, Tau(body, a, b, local));
  }

  FormulaPtr Power(const Pattern& body, size_t i,
                   const std::vector<std::string>& src,
                   const std::vector<std::string>& tgt) {
    if (i == 0) return MakeFAnd(atoms.N(src), EqVec(src, tgt));
    std::vector<std::vector<std::string>> points{src};
    std::vector<std::string> mids;
    for (size_t j = 1; j < i; ++j) {
      points.push_back(namer.FreshList(k, "m"));
      mids.insert(mids.end(), points.back().begin(), points.back().end());
    }
    points.push_back(tgt);
    std::vector<FormulaPtr> steps;
    for (size_t j = 0; j < i; ++j) {
      steps.push_back(Iter(body, points[j], points[j + 1]));
    }
    return MakeExistsAll(mids, MakeFAndAll(steps));
  }

  FormulaPtr Star(const Pattern& body, const std::vector<std::string>& src,
                  const std::vector<std::string>& tgt) {
    auto u = namer.FreshList(k, "u");
    auto v = namer.FreshList(k, "w");
    return MakeFAnd(atoms.N(src), MakeTC(u, v, Iter(body, u, v), src, tgt));
  }

  FormulaPtr Repeat(const Pattern::Repeat& r,
                    const std::vector<std::string>& src,
                    const std::vector<std::string>& tgt) {
    if (r.hi) {
      FormulaPtr out = Power(*r.body, r.lo, src, tgt);
      for (size_t i = r.lo + 1; i <= *r.hi; ++i) {
        out = MakeFOr(out, Power(*r.body, i, src, tgt));
      }
      return out;
    }
    if (r.lo == 0) return Star(*r.body, src, tgt);
    auto m = namer.FreshList(k, "m");
    return MakeExistsAll(m, MakeFAnd(Power(*r.body, r.lo, src, m),
                                     Star(*r.body, m, tgt)));
  }
};

}  // namespace

ViewFormulas BaseViewFormulas(const std::array<std::string, 6>& rels, size_t k,
                              FreshNamer& namer) {
  ViewFormulas out;
  out.k = k;
  const size_t arity[6] = {k, k, 2 * k, 2 * k, k + 1, k + 2};
  for (size_t i = 0; i < 6; ++i) {
    auto vars = namer.FreshList(arity[i], "c");
    out.rels[i] = {MakeAtom(rels[i], vars), vars};
  }
  return out;
}

FormulaPtr Instantiate(const ColumnFormula& cf,
                       const std::vector<std::string>& args,
                       FreshNamer& namer) {
  if (args.size() != cf.vars.size()) {
    throw Error(ErrorCode::kArityMismatch,
                "instantiating " + std::to_string(cf.vars.size()) +
                    " columns with " + std::to_string(args.size()) +
                    " variables");
  }
  NameMap env;
  for (size_t i = 0; i < args.size(); ++i) env[cf.vars[i]] = args[i];
  return Rename(*cf.formula, env, namer);
}

FormulaPtr CondToFotc(const Condition& theta, const ViewFormulas& view,
                      const VarEnv& env, FreshNamer& namer) {
  ViewAtoms atoms{view, namer};
  return std::visit(
      [&](const auto& n) -> FormulaPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Condition::PropEq>) {
          std::string w = namer.Fresh("k"), w2 = namer.Fresh("k");
          std::string a = namer.Fresh("p"), b = namer.Fresh("p");
          return MakeExistsAll(
              {w, w2, a, b},
              MakeFAndAll({MakeEqConst(w, n.key),
                           atoms.Prop(EnvOf(env, n.var), w, a),
                           MakeEqConst(w2, n.key2),
                           atoms.Prop(EnvOf(env, n.var2), w2, b),
                           MakeEq(a, b)}));
        } else if constexpr (std::is_same_v<T, Condition::HasLabel>) {
          std::string w = namer.Fresh("l");
          return MakeExists(w, MakeFAnd(MakeEqConst(w, n.label),
                                        atoms.Lab(EnvOf(env, n.var), w)));
        } else if constexpr (std::is_same_v<T, Condition::Not>) {
          return MakeFNot(CondToFotc(*n.inner, view, env, namer));
        } else if constexpr (std::is_same_v<T, Condition::And>) {
          return MakeFAnd(CondToFotc(*n.left, view, env, namer),
                          CondToFotc(*n.right, view, env, namer));
        } else {
          return MakeFOr(CondToFotc(*n.left, view, env, namer),
                         CondToFotc(*n.right, view, env, namer));
        }
      },
      theta.node);
}

FormulaPtr PatternToFotc(const Pattern& p, const ViewFormulas& view,
                         const std::vector<std::string>& src,
                         const std::vector<std::string>& tgt,
                         const VarEnv& env, FreshNamer& namer) {
  PatternXlate x{ViewAtoms{view, namer}, namer, view.k};
  return x.Tau(p, src, tgt, env);
}

namespace {

FormulaPtr SelToFotc(const SelCond& c, const std::vector<std::string>& cols) {
  return std::visit(
      [&](const auto& n) -> FormulaPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SelCond::ColEq>) {
          return MakeEq(cols.at(n.left - 1), cols.at(n.right - 1));
        } else if constexpr (std::is_same_v<T, SelCond::Not>) {
          return MakeFNot(SelToFotc(*n.inner, cols));
        } else if constexpr (std::is_same_v<T, SelCond::And>) {
          return MakeFAnd(SelToFotc(*n.left, cols), SelToFotc(*n.right, cols));
        } else {
          return MakeFOr(SelToFotc(*n.left, cols), SelToFotc(*n.right, cols));
        }
      },
      c.node);
}

struct Forward {
  const Schema& schema;
  FreshNamer& namer;

  // Same formula with its columns renamed to vars.
  FormulaPtr As(const ColumnFormula& cf, const std::vector<std::string>& vars) {
    return Instantiate(cf, vars, namer);
  }

  ColumnFormula Match(const OutputPattern& out, const ViewFormulas& view) {
    const size_t k = view.k;
    VarEnv env;
    std::vector<std::string> hidden;
    for (const auto& v : SchemaOf(*out.body)) env[v] = namer.FreshList(k, v);
    auto src = namer.FreshList(k, "s");
    auto tgt = namer.FreshList(k, "t");
    std::vector<FormulaPtr> parts{
        PatternToFotc(*out.body, view, src, tgt, env, namer)};
    std::vector<std::string> cols;
    std::set<std::string> shown;
    ViewAtoms atoms{view, namer};
    for (const auto& item : out.omega) {
      const auto& xs = EnvOf(env, item.var);
      if (!item.key) {
        cols.insert(cols.end(), xs.begin(), xs.end());
        shown.insert(xs.begin(), xs.end());
        continue;
      }
      std::string o = namer.Fresh("o");
      std::string w = namer.Fresh("k");
      parts.push_back(MakeExists(
          w, MakeFAnd(MakeEqConst(w, *item.key), atoms.Prop(xs, w, o))));
      cols.push_back(o);
    }
    hidden = Cat(src, tgt);
    for (const auto& [v, xs] : env) {
      for (const auto& x : xs) {
        if (!shown.count(x)) hidden.push_back(x);
      }
    }
    return {MakeExistsAll(hidden, MakeFAndAll(parts)), cols};
  }

  ColumnFormula Go(const Query& q) {
    return std::visit(
        [&](const auto& n) -> ColumnFormula {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Query::Rel>) {
            auto vars = namer.FreshList(StaticArity(q, schema), "x");
            return {MakeAtom(n.name, vars), vars};
          } else if constexpr (std::is_same_v<T, Query::Const>) {
            std::string x = namer.Fresh("x");
            return {MakeEqConst(x, n.value), {x}};
          } else if constexpr (std::is_same_v<T, Query::Project>) {
            ColumnFormula in = Go(*n.input);
            auto xs = namer.FreshList(n.indices.size(), "x");
            std::vector<FormulaPtr> parts{in.formula};
            for (size_t j = 0; j < xs.size(); ++j) {
              parts.push_back(MakeEq(xs[j], in.vars.at(n.indices[j] - 1)));
            }
            return {MakeExistsAll(in.vars, MakeFAndAll(parts)), xs};
          } else if constexpr (std::is_same_v<T, Query::Select>) {
            ColumnFormula in = Go(*n.input);
            return {MakeFAnd(in.formula, SelToFotc(*n.cond, in.vars)), in.vars};
          } else if constexpr (std::is_same_v<T, Query::Product>) {
            ColumnFormula a = Go(*n.left);
            ColumnFormula b = Go(*n.right);
            return {MakeFAnd(a.formula, b.formula), Cat(a.vars, b.vars)};
          } else if constexpr (std::is_same_v<T, Query::Union> ||
                               std::is_same_v<T, Query::Diff>) {
            ColumnFormula a = Go(*n.left);
            ColumnFormula b = Go(*n.right);
            if (a.vars.size() != b.vars.size()) {
              throw Error(ErrorCode::kArityMismatch, "set operation arities");
            }
            FormulaPtr rb = As(b, a.vars);
            if constexpr (std::is_same_v<T, Query::Union>) {
              return {MakeFOr(a.formula, rb), a.vars};
            } else {
              return {MakeFAnd(a.formula, MakeFNot(rb)), a.vars};
            }
          } else if constexpr (std::is_same_v<T, Query::MatchRO>) {
            StaticArity(q, schema);
            return Match(n.out, BaseViewFormulas(n.rels, 1, namer));
          } else if constexpr (std::is_same_v<T, Query::MatchRW> ||
                               std::is_same_v<T, Query::MatchEXT>) {
            StaticArity(q, schema);
            ViewFormulas view;
            std::array<size_t, 6> arities{};
            for (size_t i = 0; i < 6; ++i) {
              view.rels[i] = Go(*n.subs[i]);
              arities[i] = view.rels[i].vars.size();
            }
            view.k = ViewArity(arities);
            return Match(n.out, view);
          } else {
            ColumnFormula in = Go(*n.input);
            const size_t k = n.k;
            if (in.vars.size() != 2 * k + n.l) {
              throw Error(ErrorCode::kArityMismatch, "TCLOOP input arity");
            }
            auto x = namer.FreshList(k, "x");
            auto y = namer.FreshList(k, "y");
            auto p = namer.FreshList(n.l, "p");
            auto w = namer.FreshList(k, "m");
            auto u = namer.FreshList(k, "u");
            auto v = namer.FreshList(k, "w");
            FormulaPtr first = As(in, Cat(Cat(x, w), p));
            FormulaPtr step = As(in, Cat(Cat(u, v), p));
            FormulaPtr f = MakeExistsAll(
                w, MakeFAnd(first, MakeTC(u, v, step, w, y)));
            return {f, Cat(Cat(x, y), p)};
          }
        },
        q.node);
  }
};

}  // namespace

ColumnFormula PgqToFotc(const Query& q, const Schema& schema,
                        FreshNamer& namer) {
  StaticArity(q, schema);
  return Forward{schema, namer}.Go(q);
}

ColumnFormula PgqToFotc(const Query& q, const Schema& schema) {
  FreshNamer namer;
  return PgqToFotc(q, schema, namer);
}

// ---------------------------------------------------------------- backward

QueryPtr ActiveDomainQuery(const Schema& schema,
                           const std::set<Value>& constants) {
  QueryPtr out;
  auto add = [&](QueryPtr q) { out = out ? MakeUnion(out, q) : q; };
  for (const auto& [name, arity] : schema) {
    for (size_t i = 1; i <= arity; ++i) add(MakeProject({i}, MakeRel(name)));
  }
  for (const auto& c : constants) add(MakeConst(c));
  if (!out) {
    out = MakeSelect(SelCond::MakeNot(SelCond::Eq(1, 1)), MakeConst(0));
  }
  return out;
}

QueryPtr AlignColumns(QueryPtr q, const std::vector<std::string>& from,
                      const std::vector<std::string>& to) {
  std::vector<std::string> a = from, b = to;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b || std::adjacent_find(a.begin(), a.end()) != a.end()) {
    throw Error(ErrorCode::kOrderMismatch,
                "column orders are not permutations of each other");
  }
  if (from == to) return q;
  std::vector<size_t> idx;
  for (const auto& v : to) {
    idx.push_back(std::find(from.begin(), from.end(), v) - from.begin() + 1);
  }
  return MakeProject(std::move(idx), std::move(q));
}

namespace {

struct Columns {
  QueryPtr q;
  std::vector<std::string> cols;
};

std::vector<size_t> Range(size_t from, size_t to) {  // inclusive, 1-based
  std::vector<size_t> out;
  for (size_t i = from; i <= to; ++i) out.push_back(i);
  return out;
}

std::vector<size_t> Cat(std::vector<size_t> a, const std::vector<size_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

SelCondPtr AndAll(const std::vector<SelCondPtr>& cs) {
  SelCondPtr out = cs.at(0);
  for (size_t i = 1; i < cs.size(); ++i) out = SelCond::MakeAnd(out, cs[i]);
  return out;
}

struct Backward {
  const Schema& schema;
  TcStrategy strat;
  QueryPtr qa;

  QueryPtr Power(size_t n) const {
    if (n == 0) return MakeProject({}, MakeConst(0));
    QueryPtr out = qa;
    for (size_t i = 1; i < n; ++i) out = MakeProduct(out, qa);
    return out;
  }

  QueryPtr Empty(size_t arity) const {
    QueryPtr none = MakeSelect(SelCond::MakeNot(SelCond::Eq(1, 1)), qa);
    return MakeProject(std::vector<size_t>(arity, 1), none);
  }

  // Adds the missing variables of target as domain-ranging columns and
  // orders the columns as target.
  Columns Widen(const Columns& c, const std::vector<std::string>& target) const {
    std::vector<std::string> cols = c.cols;
    size_t missing = 0;
    for (const auto& v : target) {
      if (std::find(cols.begin(), cols.end(), v) == cols.end()) {
        cols.push_back(v);
        ++missing;
      }
    }
    QueryPtr q = missing ? MakeProduct(c.q, Power(missing)) : c.q;
    return {AlignColumns(q, cols, target), target};
  }

  static std::vector<std::string> UnionCols(const std::vector<std::string>& a,
                                            const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b) {
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
  }

  // Columns named by slots, possibly with repeats, become one column per
  // distinct variable.
  static Columns FromSlots(QueryPtr q, const std::vector<std::string>& slots) {
    std::vector<std::string> cols;
    std::vector<size_t> keep;
    std::vector<SelCondPtr> eqs;
    for (size_t i = 0; i < slots.size(); ++i) {
      auto it = std::find(cols.begin(), cols.end(), slots[i]);
      if (it == cols.end()) {
        cols.push_back(slots[i]);
        keep.push_back(i + 1);
      } else {
        eqs.push_back(SelCond::Eq(keep[it - cols.begin()], i + 1));
      }
    }
    if (!eqs.empty()) q = MakeSelect(AndAll(eqs), q);
    if (keep.size() != slots.size()) q = MakeProject(keep, q);
    return {q, cols};
  }

  Columns Go(const Formula& f) const {
    return std::visit(
        [&](const auto& n) -> Columns {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Formula::Atom>) {
            auto it = schema.find(n.rel);
            if (it == schema.end()) {
              throw Error(ErrorCode::kUnknownRelation,
                          "no relation named '" + n.rel + "'");
            }
            if (it->second != n.vars.size()) {
              throw Error(ErrorCode::kArityMismatch,
                          "atom " + n.rel + " used with " +
                              std::to_string(n.vars.size()) + " variables");
            }
            return FromSlots(MakeRel(n.rel), n.vars);
          } else if constexpr (std::is_same_v<T, Formula::Eq>) {
            if (n.left == n.right) return {qa, {n.left}};
            return {MakeSelect(SelCond::Eq(1, 2), MakeProduct(qa, qa)),
                    {n.left, n.right}};
          } else if constexpr (std::is_same_v<T, Formula::EqConst>) {
            return {MakeConst(n.value), {n.var}};
          } else if constexpr (std::is_same_v<T, Formula::Not>) {
            Columns in = Go(*n.inner);
            return {MakeDiff(Power(in.cols.size()), in.q), in.cols};
          } else if constexpr (std::is_same_v<T, Formula::And> ||
                               std::is_same_v<T, Formula::Or>) {
            Columns a = Go(*n.left);
            Columns b = Go(*n.right);
            auto cols = UnionCols(a.cols, b.cols);
            QueryPtr qa1 = Widen(a, cols).q;
            QueryPtr qb1 = Widen(b, cols).q;
            if constexpr (std::is_same_v<T, Formula::And>) {
              return {MakeDiff(qa1, MakeDiff(qa1, qb1)), cols};
            } else {
              return {MakeUnion(qa1, qb1), cols};
            }
          } else if constexpr (std::is_same_v<T, Formula::Exists>) {
            return Project(Go(*n.body), n.var);
          } else if constexpr (std::is_same_v<T, Formula::Forall>) {
            Columns in = Go(*n.body);
            Columns neg{MakeDiff(Power(in.cols.size()), in.q), in.cols};
            Columns ex = Project(neg, n.var);
            return {MakeDiff(Power(ex.cols.size()), ex.q), ex.cols};
          } else {
            return TC(n);
          }
        },
        f.node);
  }

  Columns Project(const Columns& in, const std::string& var) const {
    std::vector<std::string> with = {var};
    for (const auto& v : in.cols) {
      if (v != var) with.push_back(v);
    }
    Columns w = Widen(in, with);
    std::vector<std::string> rest(with.begin() + 1, with.end());
    return {MakeProject(Range(2, with.size()), w.q), rest};
  }

  Columns TC(const Formula::TC& n) const {
    const size_t k = n.u.size();
    auto params = TcParams(n);
    std::vector<std::string> slots = n.u;
    slots.insert(slots.end(), n.v.begin(), n.v.end());
    slots.insert(slots.end(), params.begin(), params.end());
    Columns body = Widen(Go(*n.body), slots);
    QueryPtr closure = Closure(body.q, k, params.size());
    std::vector<std::string> out_slots = n.x;
    out_slots.insert(out_slots.end(), n.y.begin(), n.y.end());
    out_slots.insert(out_slots.end(), params.begin(), params.end());
    return FromSlots(closure, out_slots);
  }

  QueryPtr Diagonal(size_t k, size_t l) const {
    return MakeProject(Cat(Cat(Range(1, k), Range(1, k)), Range(k + 1, k + l)),
                       Power(k + l));
  }

  QueryPtr Closure(QueryPtr body, size_t k, size_t l) const {
    if (strat == TcStrategy::kParamIterate) {
      return MakeUnion(MakeTcLoop(k, l, body), Diagonal(k, l));
    }
    const size_t w = 2 * k + l;  // identifier arity of the embedded graph
    std::vector<SelCondPtr> same;
    for (size_t i = 1; i <= k; ++i) same.push_back(SelCond::Eq(i, k + i));
    QueryPtr edges = MakeSelect(SelCond::MakeNot(AndAll(same)), body);
    auto params = Range(2 * k + 1, w);
    auto us = Range(1, k);
    auto vs = Range(k + 1, 2 * k);
    auto as_node = [&](const std::vector<size_t>& side) {
      return Cat(Cat(side, side), params);
    };
    QueryPtr nodes = MakeUnion(MakeProject(as_node(us), edges),
                               MakeProject(as_node(vs), edges));
    QueryPtr src = MakeProject(Cat(Range(1, w), as_node(us)), edges);
    QueryPtr tgt = MakeProject(Cat(Range(1, w), as_node(vs)), edges);
    OutputPattern reach{
        MakeConcat(MakeConcat(MakeNode("x"), MakeStar(MakeFwdEdge())),
                   MakeNode("y")),
        {{"x", std::nullopt}, {"y", std::nullopt}}};
    QueryPtr match = MakeMatchEXT(
        reach, {nodes, edges, src, tgt, Empty(w + 1), Empty(w + 2)}, w);
    QueryPtr pairs =
        MakeProject(Cat(Cat(Range(1, k), Range(w + 1, w + k)), params), match);
    return MakeUnion(pairs, Diagonal(k, l));
  }
};

}  // namespace

QueryPtr TcClauseToPgq(QueryPtr body, size_t k, size_t l, TcStrategy strat,
                       const Schema& schema, const std::set<Value>& constants) {
  if (k == 0 || StaticArity(*body, schema) != 2 * k + l) {
    throw Error(ErrorCode::kArityMismatch,
                "closure body must have 2k+l columns");
  }
  Backward b{schema, strat, ActiveDomainQuery(schema, constants)};
  return b.Closure(std::move(body), k, l);
}

QueryPtr FotcToPgq(const Formula& f, const std::vector<std::string>& var_order,
                   TcStrategy strat, const Schema& schema) {
  std::set<std::string> order(var_order.begin(), var_order.end());
  if (order.size() != var_order.size()) {
    throw Error(ErrorCode::kVarOrderMismatch, "variable order has repeats");
  }
  for (const auto& v : FreeVars(f)) {
    if (!order.count(v)) {
      throw Error(ErrorCode::kUnboundVariable,
                  "free variable '" + v + "' missing from the column order");
    }
  }
  Backward b{schema, strat, ActiveDomainQuery(schema, ConstantsOf(f))};
  Columns c = b.Go(f);
  return b.Widen(c, var_order).q;
}

}  // namespace pgqlab
