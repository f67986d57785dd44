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

#include "pgqlab/relation.h"

#include <sstream>

#include "pgqlab/error.h"

namespace pgqlab {

void Relation::Insert(Tuple t) {
  if (t.size() != arity_) {
    throw Error(ErrorCode::kArityMismatch,
                "row " + TupleToString(t) + " has length " +
                    std::to_string(t.size()) + ", relation arity is " +
                    std::to_string(arity_));
  }
  rows_.insert(std::move(t));
}

std::string Relation::ToString() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const Tuple& t : rows_) {
    if (!first) os << ", ";
    first = false;
    os << TupleToString(t);
  }
  os << "}/" << arity_;
  return os.str();
}

Relation MakeRelation(size_t arity, const std::vector<Tuple>& rows) {
  Relation r(arity);
  for (const Tuple& t : rows) r.Insert(t);
  return r;
}

Relation TrueRelation() {
  Relation r(0);
  r.Insert({});
  return r;
}

const Relation& Database::Get(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) {
    throw Error(ErrorCode::kUnknownRelation, "no relation named '" + name + "'");
  }
  return it->second;
}

std::map<std::string, size_t> Database::Schema() const {
  std::map<std::string, size_t> schema;
  for (const auto& [name, rel] : relations_) schema[name] = rel.arity();
  return schema;
}

std::set<Value> ActiveDomain(const Database& db) {
  std::set<Value> adom;
  for (const auto& [name, rel] : db.relations()) {
    for (const Tuple& t : rel.rows()) adom.insert(t.begin(), t.end());
  }
  return adom;
}

SelCondPtr SelCond::Eq(size_t i, size_t j) {
  return std::make_shared<SelCond>(SelCond{ColEq{i, j}});
}
SelCondPtr SelCond::MakeNot(SelCondPtr c) {
  return std::make_shared<SelCond>(SelCond{Not{std::move(c)}});
}
SelCondPtr SelCond::MakeAnd(SelCondPtr a, SelCondPtr b) {
  return std::make_shared<SelCond>(SelCond{And{std::move(a), std::move(b)}});
}
SelCondPtr SelCond::MakeOr(SelCondPtr a, SelCondPtr b) {
  return std::make_shared<SelCond>(SelCond{Or{std::move(a), std::move(b)}});
}

bool SelCondHolds(const SelCond& cond, const Tuple& row) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SelCond::ColEq>) {
          return n.left >= 1 && n.right >= 1 && n.left <= row.size() &&
                 n.right <= row.size() && row[n.left - 1] == row[n.right - 1];
        } else if constexpr (std::is_same_v<T, SelCond::Not>) {
          return !SelCondHolds(*n.inner, row);
        } else if constexpr (std::is_same_v<T, SelCond::And>) {
          return SelCondHolds(*n.left, row) && SelCondHolds(*n.right, row);
        } else {
          return SelCondHolds(*n.left, row) || SelCondHolds(*n.right, row);
        }
      },
      cond.node);
}

size_t SelCondMaxIndex(const SelCond& cond) {
  return std::visit(
      [](const auto& n) -> size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, SelCond::ColEq>) {
          return std::max(n.left, n.right);
        } else if constexpr (std::is_same_v<T, SelCond::Not>) {
          return SelCondMaxIndex(*n.inner);
        } else {
          return std::max(SelCondMaxIndex(*n.left), SelCondMaxIndex(*n.right));
        }
      },
      cond.node);
}

bool SelCondEquals(const SelCond& a, const SelCond& b) {
  if (a.node.index() != b.node.index()) return false;
  if (auto* x = std::get_if<SelCond::ColEq>(&a.node)) {
    const auto& y = std::get<SelCond::ColEq>(b.node);
    return x->left == y.left && x->right == y.right;
  }
  if (auto* x = std::get_if<SelCond::Not>(&a.node)) {
    return SelCondEquals(*x->inner, *std::get<SelCond::Not>(b.node).inner);
  }
  if (auto* x = std::get_if<SelCond::And>(&a.node)) {
    const auto& y = std::get<SelCond::And>(b.node);
    return SelCondEquals(*x->left, *y.left) && SelCondEquals(*x->right, *y.right);
  }
  const auto& x = std::get<SelCond::Or>(a.node);
  const auto& y = std::get<SelCond::Or>(b.node);
  return SelCondEquals(*x.left, *y.left) && SelCondEquals(*x.right, *y.right);
}

namespace {

void RequireArgs(std::span<const Relation> args, size_t n, const char* op) {
  if (args.size() != n) {
    throw Error(ErrorCode::kArityMismatch,
                std::string(op) + " expects " + std::to_string(n) +
                    " argument(s), got " + std::to_string(args.size()));
  }
}

void RequireSameArity(const Relation& a, const Relation& b, const char* op) {
  if (a.arity() != b.arity()) {
    throw Error(ErrorCode::kArityMismatch,
                std::string(op) + " of arities " + std::to_string(a.arity()) +
                    " and " + std::to_string(b.arity()));
  }
}

}  // namespace

Relation Project(const Relation& r, const std::vector<size_t>& indices) {
  for (size_t i : indices) {
    if (i < 1 || i > r.arity()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "projection index $" + std::to_string(i) +
                      " outside arity " + std::to_string(r.arity()));
    }
  }
  Relation out(indices.size());
  for (const Tuple& t : r.rows()) {
    Tuple row;
    row.reserve(indices.size());
    for (size_t i : indices) row.push_back(t[i - 1]);
    out.Insert(std::move(row));
  }
  return out;
}

Relation Select(const Relation& r, const SelCond& cond) {
  size_t max_index = SelCondMaxIndex(cond);
  if (max_index > r.arity()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "selection references $" + std::to_string(max_index) +
                    " outside arity " + std::to_string(r.arity()));
  }
  Relation out(r.arity());
  for (const Tuple& t : r.rows()) {
    if (SelCondHolds(cond, t)) out.Insert(t);
  }
  return out;
}

Relation Product(const Relation& a, const Relation& b) {
  Relation out(a.arity() + b.arity());
  for (const Tuple& x : a.rows()) {
    for (const Tuple& y : b.rows()) out.Insert(Concat(x, y));
  }
  return out;
}

Relation Union(const Relation& a, const Relation& b) {
  RequireSameArity(a, b, "union");
  Relation out = a;
  for (const Tuple& t : b.rows()) out.Insert(t);
  return out;
}

Relation Difference(const Relation& a, const Relation& b) {
  RequireSameArity(a, b, "difference");
  Relation out(a.arity());
  for (const Tuple& t : a.rows()) {
    if (!b.contains(t)) out.Insert(t);
  }
  return out;
}

Relation ApplyRA(const RAOp& op, std::span<const Relation> args) {
  return std::visit(
      [&](const auto& o) -> Relation {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, ProjectOp>) {
          RequireArgs(args, 1, "projection");
          return Project(args[0], o.indices);
        } else if constexpr (std::is_same_v<T, SelectOp>) {
          RequireArgs(args, 1, "selection");
          return Select(args[0], *o.cond);
        } else if constexpr (std::is_same_v<T, ProductOp>) {
          RequireArgs(args, 2, "product");
          return Product(args[0], args[1]);
        } else if constexpr (std::is_same_v<T, UnionOp>) {
          RequireArgs(args, 2, "union");
          return Union(args[0], args[1]);
        } else {
          RequireArgs(args, 2, "difference");
          return Difference(args[0], args[1]);
        }
      },
      op);
}

}  // namespace pgqlab
