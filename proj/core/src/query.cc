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

#include "pgqlab/query.h"

#include <algorithm>

#include "pgqlab/error.h"
#include "pgqlab/property_graph.h"

namespace pgqlab {

QueryPtr MakeRel(std::string name) {
  return std::make_shared<Query>(Query{Query::Rel{std::move(name)}});
}
QueryPtr MakeConst(Value v) {
  return std::make_shared<Query>(Query{Query::Const{std::move(v)}});
}
QueryPtr MakeProject(std::vector<size_t> indices, QueryPtr q) {
  return std::make_shared<Query>(
      Query{Query::Project{std::move(indices), std::move(q)}});
}
QueryPtr MakeSelect(SelCondPtr cond, QueryPtr q) {
  return std::make_shared<Query>(
      Query{Query::Select{std::move(cond), std::move(q)}});
}
QueryPtr MakeProduct(QueryPtr a, QueryPtr b) {
  return std::make_shared<Query>(
      Query{Query::Product{std::move(a), std::move(b)}});
}
QueryPtr MakeUnion(QueryPtr a, QueryPtr b) {
  return std::make_shared<Query>(
      Query{Query::Union{std::move(a), std::move(b)}});
}
QueryPtr MakeDiff(QueryPtr a, QueryPtr b) {
  return std::make_shared<Query>(
      Query{Query::Diff{std::move(a), std::move(b)}});
}
QueryPtr MakeMatchRO(OutputPattern out, std::array<std::string, 6> rels) {
  return std::make_shared<Query>(
      Query{Query::MatchRO{std::move(out), std::move(rels)}});
}
QueryPtr MakeMatchRW(OutputPattern out, std::array<QueryPtr, 6> subs) {
  return std::make_shared<Query>(
      Query{Query::MatchRW{std::move(out), std::move(subs)}});
}
QueryPtr MakeMatchEXT(OutputPattern out, std::array<QueryPtr, 6> subs,
                      std::optional<size_t> declared_arity) {
  return std::make_shared<Query>(Query{
      Query::MatchEXT{std::move(out), std::move(subs), declared_arity}});
}
QueryPtr MakeTcLoop(size_t k, size_t l, QueryPtr q) {
  return std::make_shared<Query>(Query{Query::TcLoop{k, l, std::move(q)}});
}

size_t ViewArity(const std::array<size_t, 6>& a) {
  size_t k = a[0];
  if (k == 0 || a[1] != k || a[2] != 2 * k || a[3] != 2 * k ||
      a[4] != k + 1 || a[5] != k + 2) {
    std::string shape;
    for (size_t x : a) shape += (shape.empty() ? "" : ",") + std::to_string(x);
    throw Error(ErrorCode::kArityUndetermined,
                "view relation arities (" + shape +
                    ") fit no identifier arity");
  }
  return k;
}

namespace {

size_t MatchArity(const OutputPattern& out, const std::array<size_t, 6>& a,
                  std::optional<size_t> required) {
  size_t k = ViewArity(a);
  if (required && k != *required) {
    throw Error(ErrorCode::kArityMismatch,
                "view has identifier arity " + std::to_string(k) +
                    ", expected " + std::to_string(*required));
  }
  RequireValid(out);
  return OutputArity(out, k);
}

std::array<size_t, 6> SubArities(const std::array<QueryPtr, 6>& subs,
                                 const Schema& schema) {
  std::array<size_t, 6> a{};
  for (size_t i = 0; i < 6; ++i) a[i] = StaticArity(*subs[i], schema);
  return a;
}

size_t RelArity(const std::string& name, const Schema& schema) {
  auto it = schema.find(name);
  if (it == schema.end()) {
    throw Error(ErrorCode::kUnknownRelation, "no relation named '" + name + "'");
  }
  return it->second;
}

}  // namespace

size_t StaticArity(const Query& q, const Schema& schema) {
  return std::visit(
      [&](const auto& n) -> size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Query::Rel>) {
          return RelArity(n.name, schema);
        } else if constexpr (std::is_same_v<T, Query::Const>) {
          return 1;
        } else if constexpr (std::is_same_v<T, Query::Project>) {
          size_t a = StaticArity(*n.input, schema);
          for (size_t i : n.indices) {
            if (i == 0 || i > a) {
              throw Error(ErrorCode::kIndexOutOfRange,
                          "projection index " + std::to_string(i) +
                              " on arity " + std::to_string(a));
            }
          }
          return n.indices.size();
        } else if constexpr (std::is_same_v<T, Query::Select>) {
          size_t a = StaticArity(*n.input, schema);
          size_t m = SelCondMaxIndex(*n.cond);
          if (m == 0 || m > a) {
            throw Error(ErrorCode::kIndexOutOfRange,
                        "selection index " + std::to_string(m) +
                            " on arity " + std::to_string(a));
          }
          return a;
        } else if constexpr (std::is_same_v<T, Query::Product>) {
          return StaticArity(*n.left, schema) + StaticArity(*n.right, schema);
        } else if constexpr (std::is_same_v<T, Query::Union> ||
                             std::is_same_v<T, Query::Diff>) {
          size_t a = StaticArity(*n.left, schema);
          size_t b = StaticArity(*n.right, schema);
          if (a != b) {
            throw Error(ErrorCode::kArityMismatch,
                        "set operation on arities " + std::to_string(a) +
                            " and " + std::to_string(b));
          }
          return a;
        } else if constexpr (std::is_same_v<T, Query::MatchRO>) {
          std::array<size_t, 6> a{};
          for (size_t i = 0; i < 6; ++i) a[i] = RelArity(n.rels[i], schema);
          return MatchArity(n.out, a, 1);
        } else if constexpr (std::is_same_v<T, Query::MatchRW>) {
          return MatchArity(n.out, SubArities(n.subs, schema), 1);
        } else if constexpr (std::is_same_v<T, Query::MatchEXT>) {
          return MatchArity(n.out, SubArities(n.subs, schema),
                            n.declared_arity);
        } else {
          size_t a = StaticArity(*n.input, schema);
          if (n.k == 0 || a != 2 * n.k + n.l) {
            throw Error(ErrorCode::kArityMismatch,
                        "TCLOOP[" + std::to_string(n.k) + "," +
                            std::to_string(n.l) + "] over arity " +
                            std::to_string(a));
          }
          return a;
        }
      },
      q.node);
}

namespace {

Relation EvalMatch(const OutputPattern& out, ViewRelations rels,
                   std::optional<size_t> required, const EvalOptions& opts) {
  ViewReport report = ValidateView(rels, required);
  if (!report.valid) throw Error(ErrorCode::kInvalidView, report.ToString());
  RequireValid(out);
  return EvalOutput(PgView(rels), out, opts);
}

Relation EvalTcLoop(const Query::TcLoop& n, const Relation& body,
                    const EvalOptions& opts) {
  const size_t k = n.k;
  std::set<Value> used;
  for (const auto& row : body.rows()) used.insert(row.begin(), row.end());
  size_t counter = 0;
  auto fresh = [&]() {
    for (;;) {
      Value v(std::string("~e") + std::to_string(counter++));
      if (!used.count(v)) return v;
    }
  };

  std::map<Tuple, std::vector<std::pair<Tuple, Tuple>>> by_param;
  for (const auto& row : body.rows()) {
    Tuple u(row.begin(), row.begin() + k);
    Tuple v(row.begin() + k, row.begin() + 2 * k);
    Tuple c(row.begin() + 2 * k, row.end());
    by_param[c].emplace_back(std::move(u), std::move(v));
  }

  OutputPattern reach{
      MakeConcat(MakeConcat(MakeNode("x"),
                            MakeRepeat(MakeFwdEdge(), 1, std::nullopt)),
                 MakeNode("y")),
      {{"x", std::nullopt}, {"y", std::nullopt}}};

  Relation out(2 * k + n.l);
  for (const auto& [c, pairs] : by_param) {
    ViewRelations rels{Relation(k),         Relation(k),
                       Relation(2 * k),     Relation(2 * k),
                       Relation(k + 1),     Relation(k + 2)};
    for (const auto& [u, v] : pairs) {
      rels[0].Insert(u);
      rels[0].Insert(v);
      Tuple e(k, fresh());
      rels[1].Insert(e);
      rels[2].Insert(Concat(e, u));
      rels[3].Insert(Concat(e, v));
    }
    Relation r = EvalOutput(PgViewExactArity(rels, k), reach, opts);
    for (const auto& row : r.rows()) out.Insert(Concat(row, c));
  }
  return out;
}

}  // namespace

Relation EvalQuery(const Database& db, const Query& q,
                   const EvalOptions& opts) {
  return std::visit(
      [&](const auto& n) -> Relation {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Query::Rel>) {
          return db.Get(n.name);
        } else if constexpr (std::is_same_v<T, Query::Const>) {
          return MakeRelation(1, {{n.value}});
        } else if constexpr (std::is_same_v<T, Query::Project>) {
          return Project(EvalQuery(db, *n.input, opts), n.indices);
        } else if constexpr (std::is_same_v<T, Query::Select>) {
          return Select(EvalQuery(db, *n.input, opts), *n.cond);
        } else if constexpr (std::is_same_v<T, Query::Product>) {
          return Product(EvalQuery(db, *n.left, opts),
                         EvalQuery(db, *n.right, opts));
        } else if constexpr (std::is_same_v<T, Query::Union>) {
          return Union(EvalQuery(db, *n.left, opts),
                       EvalQuery(db, *n.right, opts));
        } else if constexpr (std::is_same_v<T, Query::Diff>) {
          return Difference(EvalQuery(db, *n.left, opts),
                            EvalQuery(db, *n.right, opts));
        } else if constexpr (std::is_same_v<T, Query::MatchRO>) {
          ViewRelations rels;
          for (size_t i = 0; i < 6; ++i) rels[i] = db.Get(n.rels[i]);
          return EvalMatch(n.out, std::move(rels), 1, opts);
        } else if constexpr (std::is_same_v<T, Query::MatchRW> ||
                             std::is_same_v<T, Query::MatchEXT>) {
          ViewRelations rels;
          for (size_t i = 0; i < 6; ++i) {
            rels[i] = EvalQuery(db, *n.subs[i], opts);
          }
          std::optional<size_t> required;
          if constexpr (std::is_same_v<T, Query::MatchRW>) {
            required = 1;
          } else {
            required = n.declared_arity;
          }
          return EvalMatch(n.out, std::move(rels), required, opts);
        } else {
          Relation body = EvalQuery(db, *n.input, opts);
          if (n.k == 0 || body.arity() != 2 * n.k + n.l) {
            throw Error(ErrorCode::kArityMismatch,
                        "TCLOOP input arity " + std::to_string(body.arity()));
          }
          return EvalTcLoop(n, body, opts);
        }
      },
      q.node);
}

std::string FragmentClass::ToString() const {
  switch (kind) {
    case kRO: return "RO";
    case kRW: return "RW";
    case kEXT: return "EXT(" + std::to_string(arity) + ")";
  }
  return "?";
}

namespace {

struct ClassWalk {
  const Schema& schema;
  bool beyond_ro = false;
  size_t max_arity = 0;

  void Walk(const Query& q) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Query::Rel>) {
          } else if constexpr (std::is_same_v<T, Query::Const>) {
            beyond_ro = true;
          } else if constexpr (std::is_same_v<T, Query::Project> ||
                               std::is_same_v<T, Query::Select>) {
            Walk(*n.input);
          } else if constexpr (std::is_same_v<T, Query::Product> ||
                               std::is_same_v<T, Query::Union> ||
                               std::is_same_v<T, Query::Diff>) {
            Walk(*n.left);
            Walk(*n.right);
          } else if constexpr (std::is_same_v<T, Query::MatchRO>) {
            max_arity = std::max<size_t>(max_arity, 1);
          } else if constexpr (std::is_same_v<T, Query::MatchRW>) {
            beyond_ro = true;
            max_arity = std::max<size_t>(max_arity, 1);
            for (const auto& s : n.subs) Walk(*s);
          } else if constexpr (std::is_same_v<T, Query::MatchEXT>) {
            beyond_ro = true;
            std::array<size_t, 6> a{};
            for (size_t i = 0; i < 6; ++i) a[i] = StaticArity(*n.subs[i], schema);
            max_arity = std::max(max_arity, ViewArity(a));
            for (const auto& s : n.subs) Walk(*s);
          } else {
            beyond_ro = true;
            max_arity = std::max(max_arity, n.k);
            Walk(*n.input);
          }
        },
        q.node);
  }
};

}  // namespace

FragmentClass ClassifyFragment(const Query& q, const Schema& schema) {
  ClassWalk w{schema};
  w.Walk(q);
  if (!w.beyond_ro) return {FragmentClass::kRO, 0};
  if (w.max_arity <= 1) return {FragmentClass::kRW, 0};
  return {FragmentClass::kEXT, w.max_arity};
}

size_t MaxIdentArity(const Query& q, const Schema& schema) {
  ClassWalk w{schema};
  w.Walk(q);
  return w.max_arity;
}

size_t QueryDepth(const Query& q) {
  return std::visit(
      [](const auto& n) -> size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Query::Rel> ||
                      std::is_same_v<T, Query::Const> ||
                      std::is_same_v<T, Query::MatchRO>) {
          return 1;
        } else if constexpr (std::is_same_v<T, Query::Project> ||
                             std::is_same_v<T, Query::Select> ||
                             std::is_same_v<T, Query::TcLoop>) {
          return 1 + QueryDepth(*n.input);
        } else if constexpr (std::is_same_v<T, Query::MatchRW> ||
                             std::is_same_v<T, Query::MatchEXT>) {
          size_t d = 0;
          for (const auto& s : n.subs) d = std::max(d, QueryDepth(*s));
          return 1 + d;
        } else {
          return 1 + std::max(QueryDepth(*n.left), QueryDepth(*n.right));
        }
      },
      q.node);
}

}  // namespace pgqlab
