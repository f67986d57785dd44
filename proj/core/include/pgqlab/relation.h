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

#ifndef PGQLAB_RELATION_H_
#define PGQLAB_RELATION_H_

#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pgqlab/value.h"

namespace pgqlab {

// A finite set of tuples of one fixed arity. Rows are kept sorted, so
// iteration order is deterministic.
class Relation {
 public:
  using Rows = std::set<Tuple>;

  explicit Relation(size_t arity = 0) : arity_(arity) {}

  size_t arity() const { return arity_; }
  const Rows& rows() const { return rows_; }
  size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  bool contains(const Tuple& t) const { return rows_.count(t) > 0; }

  // Throws kArityMismatch when t.size() != arity().
  void Insert(Tuple t);

  friend bool operator==(const Relation&, const Relation&) = default;

  std::string ToString() const;

 private:
  size_t arity_;
  Rows rows_;
};

// Builds a relation, dropping duplicate rows.
Relation MakeRelation(size_t arity, const std::vector<Tuple>& rows);

// The nonempty 0-ary relation {()}, i.e. Boolean TRUE.
Relation TrueRelation();

class Database {
 public:
  Database() = default;

  void Put(const std::string& name, Relation rel) {
    relations_.insert_or_assign(name, std::move(rel));
  }
  bool Has(const std::string& name) const {
    return relations_.count(name) > 0;
  }
  // Throws kUnknownRelation.
  const Relation& Get(const std::string& name) const;
  const std::map<std::string, Relation>& relations() const {
    return relations_;
  }
  std::map<std::string, size_t> Schema() const;

 private:
  std::map<std::string, Relation> relations_;
};

std::set<Value> ActiveDomain(const Database& db);

// Selection conditions over 1-based column positions: $i = $j combined
// with and/or/not. No constants.
struct SelCond;
using SelCondPtr = std::shared_ptr<const SelCond>;

struct SelCond {
  struct ColEq { size_t left; size_t right; };
  struct Not { SelCondPtr inner; };
  struct And { SelCondPtr left, right; };
  struct Or { SelCondPtr left, right; };
  std::variant<ColEq, Not, And, Or> node;

  static SelCondPtr Eq(size_t i, size_t j);
  static SelCondPtr MakeNot(SelCondPtr c);
  static SelCondPtr MakeAnd(SelCondPtr a, SelCondPtr b);
  static SelCondPtr MakeOr(SelCondPtr a, SelCondPtr b);
};

bool SelCondHolds(const SelCond& cond, const Tuple& row);
size_t SelCondMaxIndex(const SelCond& cond);
bool SelCondEquals(const SelCond& a, const SelCond& b);

struct ProjectOp { std::vector<size_t> indices; };  // 1-based
struct SelectOp { SelCondPtr cond; };
struct ProductOp {};
struct UnionOp {};
struct DifferenceOp {};
using RAOp = std::variant<ProjectOp, SelectOp, ProductOp, UnionOp, DifferenceOp>;

// Applies one relational-algebra primitive. Throws kArityMismatch on a
// wrong number of arguments or incompatible arities, kIndexOutOfRange
// when a position exceeds the input arity.
Relation ApplyRA(const RAOp& op, std::span<const Relation> args);

Relation Project(const Relation& r, const std::vector<size_t>& indices);
Relation Select(const Relation& r, const SelCond& cond);
Relation Product(const Relation& a, const Relation& b);
Relation Union(const Relation& a, const Relation& b);
Relation Difference(const Relation& a, const Relation& b);

}  // namespace pgqlab

#endif  // PGQLAB_RELATION_H_
