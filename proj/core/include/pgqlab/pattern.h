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

#ifndef PGQLAB_PATTERN_H_
#define PGQLAB_PATTERN_H_

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "pgqlab/value.h"

namespace pgqlab {

// Conditions over pattern variables: x.k = y.k', l(x), and/or/not.
struct Condition;
using ConditionPtr = std::shared_ptr<const Condition>;

struct Condition {
  struct PropEq { std::string var; Value key; std::string var2; Value key2; };
  struct HasLabel { Value label; std::string var; };
  struct Not { ConditionPtr inner; };
  struct And { ConditionPtr left, right; };
  struct Or { ConditionPtr left, right; };
  std::variant<PropEq, HasLabel, Not, And, Or> node;
};

ConditionPtr MakePropEq(std::string x, Value k, std::string y, Value k2);
ConditionPtr MakeHasLabel(Value label, std::string x);
ConditionPtr MakeCondNot(ConditionPtr c);
ConditionPtr MakeCondAnd(ConditionPtr a, ConditionPtr b);
ConditionPtr MakeCondOr(ConditionPtr a, ConditionPtr b);

std::set<std::string> ConditionVars(const Condition& c);

// Upper bound of a repetition; nullopt is unbounded.
using RepeatBound = std::optional<size_t>;

struct Pattern;
using PatternPtr = std::shared_ptr<const Pattern>;

// An empty variable name marks an anonymous atom. Anonymous atoms bind
// nothing, which is observably the same as binding a fresh variable that
// no condition, join or output can mention.
struct Pattern {
  struct Node { std::string var; };
  struct FwdEdge { std::string var; };
  struct BwdEdge { std::string var; };
  struct Concat { PatternPtr left, right; };
  struct Alt { PatternPtr left, right; };
  struct Repeat { PatternPtr body; size_t lo; RepeatBound hi; };
  struct Filter { PatternPtr body; ConditionPtr cond; };
  std::variant<Node, FwdEdge, BwdEdge, Concat, Alt, Repeat, Filter> node;
};

PatternPtr MakeNode(std::string var = "");
PatternPtr MakeFwdEdge(std::string var = "");
PatternPtr MakeBwdEdge(std::string var = "");
PatternPtr MakeConcat(PatternPtr a, PatternPtr b);
PatternPtr MakeAlt(PatternPtr a, PatternPtr b);
PatternPtr MakeRepeat(PatternPtr body, size_t lo, RepeatBound hi);
PatternPtr MakeStar(PatternPtr body);
PatternPtr MakeFilter(PatternPtr body, ConditionPtr cond);

// Free variables (the pattern's schema). Repetition hides its body.
std::set<std::string> SchemaOf(const Pattern& p);

// Number of constructors in the pattern tree.
size_t PatternSize(const Pattern& p);
size_t PatternDepth(const Pattern& p);

struct OutputItem {
  std::string var;
  std::optional<Value> key;  // set for a property access var.key

  friend bool operator==(const OutputItem&, const OutputItem&) = default;
  friend auto operator<=>(const OutputItem&, const OutputItem&) = default;
};

struct OutputPattern {
  PatternPtr body;
  std::vector<OutputItem> omega;
};

enum class StaticErrorKind {
  kSchemaMismatch,
  kBadRepeatBounds,
  kUnboundVarInCondition,
  kDuplicateOutput,
  kUnboundOutputVar,
  kEmptyVariableName,
};

struct StaticError {
  StaticErrorKind kind;
  std::string message;
};

std::vector<StaticError> ValidatePattern(const Pattern& p);
std::vector<StaticError> ValidateOutputPattern(const OutputPattern& op);

// Throws kStaticError carrying the first problem, if any.
void RequireValid(const OutputPattern& op);

bool PatternEquals(const Pattern& a, const Pattern& b);
bool ConditionEquals(const Condition& a, const Condition& b);

}  // namespace pgqlab

#endif  // PGQLAB_PATTERN_H_
