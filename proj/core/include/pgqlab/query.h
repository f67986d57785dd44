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

#ifndef PGQLAB_QUERY_H_
#define PGQLAB_QUERY_H_

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pgqlab/pattern.h"
#include "pgqlab/pattern_eval.h"
#include "pgqlab/relation.h"

namespace pgqlab {

struct Query;
using QueryPtr = std::shared_ptr<const Query>;
using Schema = std::map<std::string, size_t>;

struct Query {
  struct Rel { std::string name; };
  struct Const { Value value; };
  struct Project { std::vector<size_t> indices; QueryPtr input; };  // 1-based
  struct Select { SelCondPtr cond; QueryPtr input; };
  struct Product { QueryPtr left, right; };
  struct Union { QueryPtr left, right; };
  struct Diff { QueryPtr left, right; };
  // Pattern over a view made of six base relations (unary identifiers).
  struct MatchRO { OutputPattern out; std::array<std::string, 6> rels; };
  // Pattern over a view made of six query results (unary identifiers).
  struct MatchRW { OutputPattern out; std::array<QueryPtr, 6> subs; };
  // Pattern over a view with identifiers of any arity.
  struct MatchEXT {
    OutputPattern out;
    std::array<QueryPtr, 6> subs;
    std::optional<size_t> declared_arity;
  };
  // For an input with columns (u, v, p), |u| = |v| = k and |p| = l:
  // all (a, b, c) such that b is reachable from a by a nonempty path in
  // the graph whose nodes are the k-tuples and whose edges are the
  // (u, v) rows with p = c. One graph is built and matched per c.
  struct TcLoop { size_t k; size_t l; QueryPtr input; };

  std::variant<Rel, Const, Project, Select, Product, Union, Diff, MatchRO,
               MatchRW, MatchEXT, TcLoop>
      node;
};

QueryPtr MakeRel(std::string name);
QueryPtr MakeConst(Value v);
QueryPtr MakeProject(std::vector<size_t> indices, QueryPtr q);
QueryPtr MakeSelect(SelCondPtr cond, QueryPtr q);
QueryPtr MakeProduct(QueryPtr a, QueryPtr b);
QueryPtr MakeUnion(QueryPtr a, QueryPtr b);
QueryPtr MakeDiff(QueryPtr a, QueryPtr b);
QueryPtr MakeMatchRO(OutputPattern out, std::array<std::string, 6> rels);
QueryPtr MakeMatchRW(OutputPattern out, std::array<QueryPtr, 6> subs);
QueryPtr MakeMatchEXT(OutputPattern out, std::array<QueryPtr, 6> subs,
                      std::optional<size_t> declared_arity = std::nullopt);
QueryPtr MakeTcLoop(size_t k, size_t l, QueryPtr q);

// Identifier arity of a view from the arities of its six relations.
// Throws kArityUndetermined when no k >= 1 fits.
size_t ViewArity(const std::array<size_t, 6>& arities);

// Throws kUnknownRelation, kArityMismatch, kIndexOutOfRange,
// kArityUndetermined or kStaticError.
size_t StaticArity(const Query& q, const Schema& schema);

// Throws kInvalidView when a view is not a property graph, plus the
// errors of StaticArity for ill-formed queries.
Relation EvalQuery(const Database& db, const Query& q,
                   const EvalOptions& opts = {});

struct FragmentClass {
  enum Kind { kRO, kRW, kEXT };
  Kind kind = kRO;
  size_t arity = 0;  // identifier arity for kEXT

  std::string ToString() const;
  friend bool operator==(const FragmentClass&, const FragmentClass&) = default;
};

FragmentClass ClassifyFragment(const Query& q, const Schema& schema);

// Largest identifier arity of any view built by q; 0 when none.
size_t MaxIdentArity(const Query& q, const Schema& schema);

size_t QueryDepth(const Query& q);

}  // namespace pgqlab

#endif  // PGQLAB_QUERY_H_
