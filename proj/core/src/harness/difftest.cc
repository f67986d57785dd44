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

#include "pgqlab/harness/difftest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "pgqlab/db_json.h"
#include "pgqlab/error.h"
#include "pgqlab/formula.h"
#include "pgqlab/harness/fixtures.h"
#include "pgqlab/harness/generators.h"
#include "pgqlab/harness/oracles.h"
#include "pgqlab/text.h"

namespace pgqlab::harness {

namespace {

// Outcome of one case: nullopt when it agrees.
struct Verdict {
  bool skipped = false;
  std::optional<Mismatch> mismatch;
};

using CaseFn = std::function<Verdict(Rng&, const DiffOptions&)>;

std::string TriplesText(const std::set<MatchTriple>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& t : s) {
    if (!first) out += ", ";
    first = false;
    out += "(" + TupleToString(t.src) + ", " + TupleToString(t.tgt);
    for (const auto& [v, id] : t.mu) out += ", " + v + "=" + TupleToString(id);
    out += ")";
  }
  return out + "}";
}

std::string GraphText(const PropertyGraph& g) {
  std::string out;
  const char* names[6] = {"N", "E", "src", "tgt", "lab", "prop"};
  ViewRelations rels = g.ToRelations();
  for (size_t i = 0; i < 6; ++i) {
    if (i) out += " ";
    out += std::string(names[i]) + "=" + rels[i].ToString();
  }
  return out;
}

Verdict Differ(std::string input, std::string expected, std::string actual) {
  Verdict v;
  v.mismatch = Mismatch{0, std::move(input), std::move(expected),
                        std::move(actual)};
  return v;
}

Verdict CheckRel(const std::string& input, const Relation& expected,
                 const Relation& actual) {
  if (expected == actual) return {};
  return Differ(input, expected.ToString(), actual.ToString());
}

std::string SetText(const std::set<int>& s) {
  std::string out = "{";
  for (int c : s) out += (out.size() > 1 ? "," : "") + std::to_string(c);
  return out + "}";
}

Verdict EndpointVsPath(Rng& rng, const DiffOptions& opts) {
  PatternParams params;
  params.nested_repeat = false;
  // Instances whose path sets outgrow the limit are drawn again.
  for (int attempt = 0; attempt < 8; ++attempt) {
    PropertyGraph g = GenGraph(rng);
    PatternPtr p = GenPattern(rng, params);
    std::set<MatchTriple> oracle;
    try {
      oracle = ProjectEndpoints(EvalPatternPaths(
          g, *p, SufficientRepBound(g, *p), opts.path_limit));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPathLimit) throw;
      continue;
    }
    std::set<MatchTriple> engine = EvalPattern(g, *p, opts.eval);
    if (engine == oracle) return {};
    return Differ(ToText(*p) + " on " + GraphText(g), TriplesText(oracle),
                  TriplesText(engine));
  }
  Verdict v;
  v.skipped = true;
  return v;
}

FragmentClass::Kind KindFor(Rng& rng) {
  switch (rng.Below(3)) {
    case 0: return FragmentClass::kRO;
    case 1: return FragmentClass::kRW;
    default: return FragmentClass::kEXT;
  }
}

Verdict PgqToFotcCase(Rng& rng, const DiffOptions& opts) {
  PgqCase c = GenPgqCase(rng, KindFor(rng));
  Schema schema = c.db.Schema();
  ColumnFormula cf = PgqToFotc(*c.query, schema);
  Relation oracle = EvalFormulaRel(c.db, *cf.formula, cf.vars);
  Relation engine = EvalQuery(c.db, *c.query, opts.eval);
  return CheckRel(ToText(*c.query) + " on " + DbToJson(c.db), oracle, engine);
}

std::string FotcInput(const FotcCase& c) {
  std::string order;
  for (const auto& v : c.order) order += (order.empty() ? "" : ",") + v;
  return ToText(*c.formula) + " as (" + order + ") on " + DbToJson(c.db);
}

Verdict FotcToPgqCase(Rng& rng, const DiffOptions& opts) {
  FotcCase c = GenFotcCase(rng, 2);
  Relation oracle = EnumerateFormulaRel(c.db, *c.formula, c.order);
  for (TcStrategy s : {TcStrategy::kParamIterate, TcStrategy::kParamEmbed}) {
    QueryPtr q = FotcToPgq(*c.formula, c.order, s, c.db.Schema());
    Relation engine = EvalQuery(c.db, *q, opts.eval);
    Verdict v = CheckRel(FotcInput(c) + " via " + std::string(TcStrategyName(s)),
                         oracle, engine);
    if (v.mismatch) return v;
  }
  return {};
}

Verdict StrategyAgreement(Rng& rng, const DiffOptions& opts) {
  FotcCase c = GenFotcCase(rng, 2);
  Schema schema = c.db.Schema();
  Relation a = EvalQuery(
      c.db, *FotcToPgq(*c.formula, c.order, TcStrategy::kParamIterate, schema),
      opts.eval);
  Relation b = EvalQuery(
      c.db, *FotcToPgq(*c.formula, c.order, TcStrategy::kParamEmbed, schema),
      opts.eval);
  return CheckRel(FotcInput(c), a, b);
}

Verdict FormulaAlgebra(Rng& rng, const DiffOptions&) {
  FotcCase c = GenFotcCase(rng, 2);
  return CheckRel(FotcInput(c),
                  EnumerateFormulaRel(c.db, *c.formula, c.order),
                  EvalFormulaRel(c.db, *c.formula, c.order));
}

Verdict ArityPreservation(Rng& rng, const DiffOptions&) {
  if (rng.Chance(0.5)) {
    PgqCase c = GenPgqCase(rng, KindFor(rng));
    Schema schema = c.db.Schema();
    FragmentClass cls = ClassifyFragment(*c.query, schema);
    size_t bound = cls.kind == FragmentClass::kEXT ? cls.arity : 1;
    size_t got = TcArity(*PgqToFotc(*c.query, schema).formula);
    if (got <= bound) return {};
    return Differ(ToText(*c.query), "tc arity <= " + std::to_string(bound),
                  std::to_string(got));
  }
  FotcCase c = GenFotcCase(rng, 2);
  size_t bound = std::max<size_t>(1, TcArity(*c.formula));
  size_t got = MaxIdentArity(
      *FotcToPgq(*c.formula, c.order, TcStrategy::kParamIterate,
                 c.db.Schema()),
      c.db.Schema());
  if (got <= bound) return {};
  return Differ(FotcInput(c), "identifier arity <= " + std::to_string(bound),
                std::to_string(got));
}

Verdict TcReflexivity(Rng& rng, const DiffOptions& opts) {
  FotcCase c = GenTcCase(rng, 2);
  const auto& tc = std::get<Formula::TC>(c.formula->node);
  std::vector<std::string> params;
  for (const auto& v : c.order) {
    if (std::find(tc.x.begin(), tc.x.end(), v) == tc.x.end() &&
        std::find(tc.y.begin(), tc.y.end(), v) == tc.y.end()) {
      params.push_back(v);
    }
  }
  std::vector<Relation> results;
  for (TcStrategy s : {TcStrategy::kParamIterate, TcStrategy::kParamEmbed}) {
    results.push_back(EvalQuery(
        c.db, *FotcToPgq(*c.formula, c.order, s, c.db.Schema()), opts.eval));
  }
  std::set<Value> dom_set = EvalDomain(c.db, *c.formula);
  std::vector<Value> dom(dom_set.begin(), dom_set.end());
  const size_t k = tc.x.size(), n = k + params.size();
  std::vector<size_t> idx(n, 0);
  while (!dom.empty()) {
    Assignment a;
    for (size_t i = 0; i < k; ++i) a[tc.x[i]] = a[tc.y[i]] = dom[idx[i]];
    for (size_t i = 0; i < params.size(); ++i) a[params[i]] = dom[idx[k + i]];
    Tuple row;
    for (const auto& v : c.order) row.push_back(a.at(v));
    if (!EvalFormula(c.db, *c.formula, a)) {
      return Differ(FotcInput(c), "formula holds at " + TupleToString(row),
                    "false");
    }
    for (size_t s = 0; s < results.size(); ++s) {
      if (!results[s].contains(row)) {
        return Differ(FotcInput(c) + " via " +
                          std::string(TcStrategyName(
                              s == 0 ? TcStrategy::kParamIterate
                                     : TcStrategy::kParamEmbed)),
                      "row " + TupleToString(row), results[s].ToString());
      }
    }
    size_t i = n;
    while (i > 0 && ++idx[i - 1] == dom.size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return {};
}

Verdict FixtureCase(const Database& db, const std::string& text,
                    Relation (*oracle)(const Database&),
                    const DiffOptions& opts) {
  QueryPtr q = ParseQuery(text);
  return CheckRel(DbToJson(db), oracle(db), EvalQuery(db, *q, opts.eval));
}

Verdict Alternating(Rng& rng, const DiffOptions& opts) {
  return FixtureCase(GenColoredDb(rng), AlternatingQueryText(),
                     AlternatingOracle, opts);
}

Verdict Increasing(Rng& rng, const DiffOptions& opts) {
  return FixtureCase(GenWeightedDb(rng), IncreasingQueryText(),
                     IncreasingOracle, opts);
}

Verdict Composite(Rng& rng, const DiffOptions& opts) {
  return FixtureCase(GenWeightedDb(rng), CompositeQueryText(),
                     CompositeOracle, opts);
}

Verdict ViewValidation(Rng& rng, const DiffOptions&) {
  ViewRelations rels = GenViewBundle(rng, !rng.Chance(0.25));
  std::set<int> oracle = DirectViewCheck(rels);
  std::set<int> engine = ValidateView(rels).ViolatedConditions();
  if (oracle == engine) return {};
  std::string input;
  for (const auto& r : rels) input += r.ToString() + " ";
  return Differ(input, SetText(oracle), SetText(engine));
}

const std::map<std::string, CaseFn>& Suites() {
  static const auto* suites = new std::map<std::string, CaseFn>{
      {"alternating", Alternating},
      {"arity-preservation", ArityPreservation},
      {"composite", Composite},
      {"endpoint-vs-path", EndpointVsPath},
      {"fotc-to-pgq", FotcToPgqCase},
      {"formula-algebra", FormulaAlgebra},
      {"increasing", Increasing},
      {"pgq-to-fotc", PgqToFotcCase},
      {"strategy-agreement", StrategyAgreement},
      {"tc-reflexivity", TcReflexivity},
      {"view-validation", ViewValidation},
  };
  return *suites;
}

}  // namespace

const std::vector<std::string>& SuiteNames() {
  static const auto* names = [] {
    auto* v = new std::vector<std::string>;
    for (const auto& [name, fn] : Suites()) v->push_back(name);
    return v;
  }();
  return *names;
}

DiffReport RunSuite(const std::string& suite, const DiffOptions& opts) {
  auto it = Suites().find(suite);
  if (it == Suites().end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  DiffReport report;
  report.suite = suite;
  report.seed = opts.seed;
  for (size_t i = 0; i < opts.cases; ++i) {
    Rng rng(CaseSeed(opts.seed, i));
    Verdict v = it->second(rng, opts);
    ++report.cases;
    if (v.skipped) ++report.skipped;
    if (v.mismatch) {
      v.mismatch->index = i;
      report.mismatches.push_back(std::move(*v.mismatch));
    }
  }
  return report;
}

}  // namespace pgqlab::harness
