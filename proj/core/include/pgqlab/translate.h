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

#ifndef PGQLAB_TRANSLATE_H_
#define PGQLAB_TRANSLATE_H_

#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgqlab/formula.h"
#include "pgqlab/pattern.h"
#include "pgqlab/query.h"

namespace pgqlab {

// Hands out variable names that were never reserved or handed out before.
class FreshNamer {
 public:
  FreshNamer() = default;

  void Reserve(const std::string& name) { used_.insert(name); }
  void Reserve(const std::set<std::string>& names) {
    used_.insert(names.begin(), names.end());
  }
  std::string Fresh(std::string_view hint = "v");
  std::vector<std::string> FreshList(size_t n, std::string_view hint = "v");

 private:
  std::set<std::string> used_;
  size_t counter_ = 0;
};

enum class TcStrategy { kParamIterate, kParamEmbed };

std::string_view TcStrategyName(TcStrategy s);

// A formula together with the variables naming its columns.
struct ColumnFormula {
  FormulaPtr formula;
  std::vector<std::string> vars;
};

// Formulas for the six view relations N, E, src, tgt, lab, prop over
// identifier arity k.
struct ViewFormulas {
  std::array<ColumnFormula, 6> rels;
  size_t k = 1;
};

// View formulas that name six base relations directly.
ViewFormulas BaseViewFormulas(const std::array<std::string, 6>& rels,
                              size_t k, FreshNamer& namer);

// Copy of cf.formula with its column variables renamed to args and every
// bound variable renamed apart.
FormulaPtr Instantiate(const ColumnFormula& cf,
                       const std::vector<std::string>& args,
                       FreshNamer& namer);

// env maps each pattern variable to its k formula variables.
using VarEnv = std::map<std::string, std::vector<std::string>>;

FormulaPtr CondToFotc(const Condition& theta, const ViewFormulas& view,
                      const VarEnv& env, FreshNamer& namer);

// Formula over src, tgt and the variables of env (which must cover the
// schema of p) that holds exactly for the endpoint matches of p.
FormulaPtr PatternToFotc(const Pattern& p, const ViewFormulas& view,
                         const std::vector<std::string>& src,
                         const std::vector<std::string>& tgt,
                         const VarEnv& env, FreshNamer& namer);

// Formula and column variables with the same result relation as q.
ColumnFormula PgqToFotc(const Query& q, const Schema& schema);
ColumnFormula PgqToFotc(const Query& q, const Schema& schema,
                        FreshNamer& namer);

// body has columns (u, v, p) with |u| = |v| = k and |p| = l. The result
// has columns (x, y, p): the reflexive transitive closure per parameter
// tuple, with the diagonal taken over the whole domain.
QueryPtr TcClauseToPgq(QueryPtr body, size_t k, size_t l, TcStrategy strat,
                       const Schema& schema,
                       const std::set<Value>& constants = {});

QueryPtr FotcToPgq(const Formula& f, const std::vector<std::string>& var_order,
                   TcStrategy strat, const Schema& schema);

// The active-domain query over schema plus the given constants.
QueryPtr ActiveDomainQuery(const Schema& schema,
                           const std::set<Value>& constants);

// Wraps q in a projection turning columns named by from into columns
// named by to. Throws kOrderMismatch unless they are permutations.
QueryPtr AlignColumns(QueryPtr q, const std::vector<std::string>& from,
                      const std::vector<std::string>& to);

}  // namespace pgqlab

#endif  // PGQLAB_TRANSLATE_H_
