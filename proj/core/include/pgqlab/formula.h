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

#ifndef PGQLAB_FORMULA_H_
#define PGQLAB_FORMULA_H_

#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pgqlab/relation.h"

namespace pgqlab {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// FO[TC]. TC[u; v](body)(x; y) is the reflexive transitive closure of the
// relation body(u, v) between |u|-tuples, with the remaining free
// variables of body held fixed as parameters.
struct Formula {
  struct Atom { std::string rel; std::vector<std::string> vars; };
  struct Eq { std::string left, right; };
  struct EqConst { std::string var; Value value; };
  struct Not { FormulaPtr inner; };
  struct And { FormulaPtr left, right; };
  struct Or { FormulaPtr left, right; };
  struct Exists { std::string var; FormulaPtr body; };
  struct Forall { std::string var; FormulaPtr body; };
  struct TC {
    std::vector<std::string> u, v;
    FormulaPtr body;
    std::vector<std::string> x, y;
  };
  std::variant<Atom, Eq, EqConst, Not, And, Or, Exists, Forall, TC> node;
};

FormulaPtr MakeAtom(std::string rel, std::vector<std::string> vars);
FormulaPtr MakeEq(std::string x, std::string y);
FormulaPtr MakeEqConst(std::string x, Value c);
FormulaPtr MakeFNot(FormulaPtr f);
FormulaPtr MakeFAnd(FormulaPtr a, FormulaPtr b);
FormulaPtr MakeFOr(FormulaPtr a, FormulaPtr b);
FormulaPtr MakeExists(std::string var, FormulaPtr body);
FormulaPtr MakeForall(std::string var, FormulaPtr body);
// Throws kStaticError unless |u| = |v| = |x| = |y| >= 1 and u, v are
// pairwise distinct.
FormulaPtr MakeTC(std::vector<std::string> u, std::vector<std::string> v,
                  FormulaPtr body, std::vector<std::string> x,
                  std::vector<std::string> y);

// Conjunction / disjunction of a list; TRUE / FALSE need a variable-free
// encoding, so callers pass at least one formula.
FormulaPtr MakeFAndAll(const std::vector<FormulaPtr>& fs);
FormulaPtr MakeExistsAll(const std::vector<std::string>& vars, FormulaPtr f);

std::set<std::string> FreeVars(const Formula& f);
// Free variables in order of first occurrence.
std::vector<std::string> FreeVarsOrdered(const Formula& f);
// Every variable name occurring anywhere, bound or free.
std::set<std::string> AllVars(const Formula& f);
std::set<Value> ConstantsOf(const Formula& f);
std::set<std::string> RelationsOf(const Formula& f);

size_t TcArity(const Formula& f);
size_t FormulaSize(const Formula& f);

// Parameters of a TC node: free variables of the body other than u, v,
// in first-occurrence order.
std::vector<std::string> TcParams(const Formula::TC& tc);

using Assignment = std::map<std::string, Value>;

// Quantifiers and the intermediate tuples of TC range over the active
// domain of db together with the constants of f.
std::set<Value> EvalDomain(const Database& db, const Formula& f);

// Pointwise evaluation. Throws kUnboundVariable.
bool EvalFormula(const Database& db, const Formula& f, const Assignment& a);

// All satisfying assignments, columns in var_order. Throws
// kVarOrderMismatch unless var_order is a permutation of FreeVars(f).
Relation EvalFormulaRel(const Database& db, const Formula& f,
                        const std::vector<std::string>& var_order);

}  // namespace pgqlab

#endif  // PGQLAB_FORMULA_H_
