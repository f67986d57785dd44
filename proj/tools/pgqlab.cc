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

// pgqlab: evaluate, translate and cross-check PGQ queries and FO[TC]
// formulas over JSON databases.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pgqlab/db_json.h"
#include "pgqlab/error.h"
#include "pgqlab/formula.h"
#include "pgqlab/harness/difftest.h"
#include "pgqlab/harness/fixtures.h"
#include "pgqlab/query.h"
#include "pgqlab/text.h"
#include "pgqlab/translate.h"

namespace {

using nlohmann::json;
using namespace pgqlab;

constexpr int kExitUsage = 1;
constexpr int kExitStatic = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitMismatch = 4;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  return out;
}

// "R:2,S:1"
Schema ParseSchemaFlag(const std::string& s) {
  Schema schema;
  for (const auto& item : SplitList(s)) {
    auto colon = item.find(':');
    if (colon == std::string::npos) throw UsageError("bad --schema item " + item);
    try {
      schema[item.substr(0, colon)] = std::stoul(item.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw UsageError("bad --schema item " + item);
    }
  }
  return schema;
}

json RelationJson(const Relation& r) { return json::parse(RelationToJson(r)); }

struct Inputs {
  std::string db;
  std::string query;
  std::string formula;
  std::string order;
  std::string schema;

  Database LoadDatabase() const {
    if (db.empty()) throw UsageError("--db is required");
    return LoadDb(db);
  }
  Schema GetSchema() const {
    if (!schema.empty()) return ParseSchemaFlag(schema);
    if (!db.empty()) return LoadDb(db).Schema();
    throw UsageError("--db or --schema is required");
  }
  // Exactly one of --query and --formula.
  void RequireOne() const {
    if (query.empty() == formula.empty()) {
      throw UsageError("give exactly one of --query and --formula");
    }
  }
  std::vector<std::string> Order(const Formula& f) const {
    return order_given ? SplitList(order) : FreeVarsOrdered(f);
  }
  bool order_given = false;
};

void AddInputs(CLI::App* cmd, Inputs& in, bool need_db) {
  auto* db = cmd->add_option("--db", in.db, "database JSON file");
  if (need_db) db->required();
  cmd->add_option("--query", in.query, "query text file");
  cmd->add_option("--formula", in.formula, "formula text file");
}

int RunEval(const Inputs& in) {
  in.RequireOne();
  Database db = in.LoadDatabase();
  Relation r;
  if (!in.query.empty()) {
    QueryPtr q = ParseQuery(ReadFile(in.query));
    StaticArity(*q, db.Schema());
    r = EvalQuery(db, *q);
  } else {
    FormulaPtr f = ParseFormula(ReadFile(in.formula));
    r = EvalFormulaRel(db, *f, in.Order(*f));
  }
  std::cout << RelationToJson(r) << "\n";
  return 0;
}

std::optional<TcStrategy> StrategyFromName(const std::string& s) {
  for (TcStrategy t : {TcStrategy::kParamIterate, TcStrategy::kParamEmbed}) {
    if (TcStrategyName(t) == s) return t;
  }
  return std::nullopt;
}

int RunTranslate(const Inputs& in, const std::string& to,
                 const std::string& strategy, bool as_json) {
  in.RequireOne();
  Schema schema = in.GetSchema();
  if (!in.query.empty()) {
    if (to != "fotc") throw UsageError("a query translates --to fotc");
    ColumnFormula cf = PgqToFotc(*ParseQuery(ReadFile(in.query)), schema);
    if (as_json) {
      std::cout << json{{"formula", ToText(*cf.formula)}, {"vars", cf.vars}}
                       .dump()
                << "\n";
    } else {
      std::cout << ToText(*cf.formula) << "\n";
    }
    return 0;
  }
  if (to != "pgq") throw UsageError("a formula translates --to pgq");
  auto strat = StrategyFromName(strategy);
  if (!strat) throw UsageError("unknown strategy " + strategy);
  FormulaPtr f = ParseFormula(ReadFile(in.formula));
  std::vector<std::string> order = in.Order(*f);
  QueryPtr q = FotcToPgq(*f, order, *strat, schema);
  if (as_json) {
    std::cout << json{{"query", ToText(*q)}, {"vars", order}}.dump() << "\n";
  } else {
    std::cout << ToText(*q) << "\n";
  }
  return 0;
}

int RunClassify(const Inputs& in) {
  in.RequireOne();
  if (!in.query.empty()) {
    QueryPtr q = ParseQuery(ReadFile(in.query));
    std::cout << ClassifyFragment(*q, in.GetSchema()).ToString() << "\n";
  } else {
    FormulaPtr f = ParseFormula(ReadFile(in.formula));
    size_t k = TcArity(*f);
    std::cout << (k == 0 ? std::string("FO")
                         : "FO[TC^" + std::to_string(k) + "]")
              << "\n";
  }
  return 0;
}

int RunValidateView(const Inputs& in, const std::string& rels,
                    std::optional<size_t> arity) {
  Database db = in.LoadDatabase();
  std::vector<std::string> names = SplitList(rels);
  if (names.size() != 6) throw UsageError("--rels needs six names");
  ViewRelations view;
  for (size_t i = 0; i < 6; ++i) view[i] = db.Get(names[i]);
  ViewReport report = ValidateView(view, arity);
  json violations = json::array();
  for (const auto& v : report.violations) {
    json w = json::array();
    for (const auto& t : v.witnesses) {
      w.push_back(RelationJson(MakeRelation(t.size(), {t}))["rows"][0]);
    }
    violations.push_back(
        {{"condition", v.condition}, {"detail", v.detail}, {"witnesses", w}});
  }
  json out = {{"valid", report.valid}, {"violations", violations}};
  if (report.valid) out["id_arity"] = report.id_arity;
  std::cout << out.dump() << "\n";
  return 0;
}

std::optional<EvalFault> FaultFromName(const std::string& s) {
  if (s == "none") return EvalFault::kNone;
  if (s == "drop-zero-repetition") return EvalFault::kDropZeroRepetition;
  if (s == "skip-compatibility") return EvalFault::kSkipCompatibility;
  return std::nullopt;
}

json ReportJson(const harness::DiffReport& r) {
  json mismatches = json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"index", m.index},
                          {"input", m.input},
                          {"expected", m.expected},
                          {"actual", m.actual}});
  }
  return {{"suite", r.suite},     {"seed", r.seed},
          {"cases", r.cases},     {"skipped", r.skipped},
          {"pass", r.ok()},       {"mismatches", mismatches}};
}

int RunDifftest(const std::string& suite, uint64_t seed, size_t cases,
                const std::string& fault) {
  harness::DiffOptions opts;
  opts.seed = seed;
  opts.cases = cases;
  auto f = FaultFromName(fault);
  if (!f) throw UsageError("unknown fault " + fault);
  opts.eval.fault = *f;
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = harness::SuiteNames();
  } else {
    suites.push_back(suite);
  }
  json reports = json::array();
  bool ok = true;
  for (const auto& s : suites) {
    const auto& names = harness::SuiteNames();
    if (std::find(names.begin(), names.end(), s) == names.end()) {
      throw UsageError("unknown suite " + s);
    }
    harness::DiffReport r = harness::RunSuite(s, opts);
    ok = ok && r.ok();
    reports.push_back(ReportJson(r));
  }
  std::cout << (suites.size() == 1 ? reports[0] : reports).dump() << "\n";
  return ok ? 0 : kExitMismatch;
}

int RunDemo(const std::string& name) {
  json out = json::array();
  bool ok = true, found = name.empty();
  for (const auto& r : harness::RunDemo()) {
    if (!name.empty() && r.name != name) continue;
    found = true;
    ok = ok && r.agree;
    out.push_back({{"name", r.name},
                   {"fragment", r.fragment},
                   {"engine", RelationJson(r.engine)},
                   {"oracle", RelationJson(r.oracle)},
                   {"agree", r.agree}});
  }
  if (!found) throw UsageError("unknown demo " + name);
  std::cout << out.dump() << "\n";
  return ok ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pgqlab: property graph queries and FO[TC]"};
  app.require_subcommand(1, 1);

  Inputs in;
  std::string to, strategy = "iterate", rels, suite, fault = "none", demo;
  std::string order;
  bool as_json = false;
  std::optional<size_t> arity;
  uint64_t seed = 1;
  size_t cases = 100;

  auto add_order = [&](CLI::App* cmd) {
    cmd->add_option("--order", order, "formula columns, comma separated");
  };

  auto* eval = app.add_subcommand("eval", "evaluate a query or formula");
  AddInputs(eval, in, true);
  add_order(eval);

  auto* translate =
      app.add_subcommand("translate", "translate between PGQ and FO[TC]");
  AddInputs(translate, in, false);
  add_order(translate);
  translate->add_option("--to", to, "fotc or pgq")->required();
  translate->add_option("--strategy", strategy, "iterate or embed");
  translate->add_option("--schema", in.schema, "relation arities R:2,S:1");
  translate->add_flag("--json", as_json, "print text and columns as JSON");

  auto* classify = app.add_subcommand("classify", "fragment or TC arity");
  AddInputs(classify, in, false);
  classify->add_option("--schema", in.schema, "relation arities R:2,S:1");

  auto* validate =
      app.add_subcommand("validate-view", "check six relations as a view");
  validate->add_option("--db", in.db, "database JSON file")->required();
  validate->add_option("--rels", rels, "six relation names")->required();
  validate->add_option("--arity", arity, "expected identifier arity");

  auto* difftest = app.add_subcommand("difftest", "run a differential suite");
  difftest->add_option("--suite", suite, "suite name or all")->required();
  difftest->add_option("--seed", seed, "base seed");
  difftest->add_option("--cases", cases, "number of cases");
  difftest->add_option("--fault", fault,
                       "none, drop-zero-repetition or skip-compatibility");

  auto* demo_cmd = app.add_subcommand("demo", "run fixtures against oracles");
  demo_cmd->add_option("--name", demo, "one fixture");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (const char* env = std::getenv("PGQLAB_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::logic_error&) {
      std::cerr << "error: PGQLAB_SEED is not a number\n";
      return kExitUsage;
    }
  }
  in.order = order;
  in.order_given = !order.empty() || (eval->count("--order") +
                                      translate->count("--order")) > 0;

  try {
    if (*eval) return RunEval(in);
    if (*translate) return RunTranslate(in, to, strategy, as_json);
    if (*classify) return RunClassify(in);
    if (*validate) return RunValidateView(in, rels, arity);
    if (*difftest) return RunDifftest(suite, seed, cases, fault);
    if (*demo_cmd) return RunDemo(demo);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return IsStaticError(e.code()) ? kExitStatic : kExitRuntime;
  }
  return kExitUsage;
}
