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

#ifndef PGQLAB_HARNESS_GENERATORS_H_
#define PGQLAB_HARNESS_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pgqlab/formula.h"
#include "pgqlab/pattern.h"
#include "pgqlab/property_graph.h"
#include "pgqlab/query.h"

namespace pgqlab::harness {

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n); n must be positive.
  size_t Below(size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(engine_);
  }
  // Uniform in [lo, hi].
  size_t Range(size_t lo, size_t hi) { return lo + Below(hi - lo + 1); }
  bool Chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(engine_) < p;
  }
  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[Below(v.size())];
  }
  template <typename T>
  void Shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[Below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// Seed of case number index in a run started from seed.
uint64_t CaseSeed(uint64_t seed, size_t index);

struct GraphParams {
  size_t max_nodes = 6;
  size_t max_edges = 8;
  size_t max_id_arity = 2;
  std::vector<Value> labels = {"A", "B"};
  std::vector<Value> keys = {"k", "w"};
  std::vector<Value> values = {1, 2, 3};
};

PropertyGraph GenGraph(Rng& rng, const GraphParams& params = {});

struct PatternParams {
  size_t max_depth = 3;
  std::vector<std::string> node_vars = {"x", "y", "z"};
  std::vector<std::string> edge_vars = {"e", "f"};
  std::vector<Value> labels = {"A", "B"};
  std::vector<Value> keys = {"k", "w"};
  size_t max_lo = 2;
  size_t max_span = 2;          // hi - lo for bounded repetition
  double unbounded = 0.4;       // chance of an unbounded repetition
  bool nested_unbounded = false;
  bool nested_repeat = true;    // repetition inside a repetition body
};

// A statically valid pattern of depth at most max_depth.
PatternPtr GenPattern(Rng& rng, const PatternParams& params = {});

struct PgqCase {
  Database db;
  QueryPtr query;
};

// Database over the values 1..5 with a query of the requested fragment
// whose views satisfy the view conditions on every database the
// generator produces.
PgqCase GenPgqCase(Rng& rng, FragmentClass::Kind kind);

struct FotcCase {
  Database db;
  FormulaPtr formula;
  std::vector<std::string> order;
};

FotcCase GenFotcCase(Rng& rng, size_t max_tc_arity = 2);

// A formula TC[u; v](body)(x; y) with distinct x and y variables.
FotcCase GenTcCase(Rng& rng, size_t max_tc_arity = 2);

// Six relations, valid unless mutate is set, in which case some
// conditions are broken on purpose (possibly none).
ViewRelations GenViewBundle(Rng& rng, bool mutate);

// RedNodes, BlueNodes, Edges, Source, Target. Every node has one color;
// most edges join nodes of opposite colors.
Database GenColoredDb(Rng& rng);

// Account(bank, branch, acct), Transfer(t, bank, branch, acct, bank,
// branch, acct, ts, amount) and the order relation Lt on amounts and 0.
Database GenWeightedDb(Rng& rng);

}  // namespace pgqlab::harness

#endif  // PGQLAB_HARNESS_GENERATORS_H_
