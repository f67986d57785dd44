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

#ifndef PGQLAB_PATTERN_EVAL_H_
#define PGQLAB_PATTERN_EVAL_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pgqlab/pattern.h"
#include "pgqlab/property_graph.h"
#include "pgqlab/relation.h"

namespace pgqlab {

using Binding = std::map<std::string, Ident>;

struct MatchTriple {
  Ident src;
  Ident tgt;
  Binding mu;

  friend bool operator==(const MatchTriple&, const MatchTriple&) = default;
  friend auto operator<=>(const MatchTriple&, const MatchTriple&) = default;
};

// A path is node, edge, node, ..., node. A backward step is stored in
// walking order, so the step (n, e, m) over a backward atom has
// tgt(e) = n and src(e) = m.
struct PathMatch {
  std::vector<Ident> path;
  Binding mu;

  const Ident& src() const { return path.front(); }
  const Ident& tgt() const { return path.back(); }

  friend bool operator==(const PathMatch&, const PathMatch&) = default;
  friend auto operator<=>(const PathMatch&, const PathMatch&) = default;
};

// Deliberate evaluator corruptions, used to check that the differential
// harness notices a wrong evaluator.
enum class EvalFault {
  kNone,
  kDropZeroRepetition,   // repetition forgets the 0-iteration diagonal
  kSkipCompatibility,    // concatenation joins without checking bindings
};

struct EvalOptions {
  EvalFault fault = EvalFault::kNone;
};

// Throws kUnboundVariable when theta mentions a variable missing from mu.
bool EvalCondition(const PropertyGraph& g, const Binding& mu,
                   const Condition& theta);

std::set<MatchTriple> EvalPattern(const PropertyGraph& g, const Pattern& p,
                                  const EvalOptions& opts = {});

// Rows whose property accesses are undefined are left out.
Relation EvalOutput(const PropertyGraph& g, const OutputPattern& op,
                    const EvalOptions& opts = {});

// Number of result columns of op over identifiers of arity k.
size_t OutputArity(const OutputPattern& op, size_t k);

// Path semantics. Unbounded repetitions stop after rep_bound iterations.
// When path_limit is nonzero, producing more than path_limit paths in one
// subresult throws kPathLimit.
std::set<PathMatch> EvalPatternPaths(const PropertyGraph& g, const Pattern& p,
                                     size_t rep_bound, size_t path_limit = 0);

std::set<MatchTriple> ProjectEndpoints(const std::set<PathMatch>& s);

// A repetition bound that makes EvalPatternPaths agree with EvalPattern on
// endpoints: the number of nodes plus the largest lower bound in p.
size_t SufficientRepBound(const PropertyGraph& g, const Pattern& p);

}  // namespace pgqlab

#endif  // PGQLAB_PATTERN_EVAL_H_
