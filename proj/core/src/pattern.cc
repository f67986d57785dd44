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

#include "pgqlab/pattern.h"

#include <algorithm>

#include "pgqlab/error.h"

namespace pgqlab {

ConditionPtr MakePropEq(std::string x, Value k, std::string y, Value k2) {
  return std::make_shared<Condition>(Condition{Condition::PropEq{
      std::move(x), std::move(k), std::move(y), std::move(k2)}});
}
ConditionPtr MakeHasLabel(Value label, std::string x) {
  return std::make_shared<Condition>(
      Condition{Condition::HasLabel{std::move(label), std::move(x)}});
}
ConditionPtr MakeCondNot(ConditionPtr c) {
  return std::make_shared<Condition>(Condition{Condition::Not{std::move(c)}});
}
ConditionPtr MakeCondAnd(ConditionPtr a, ConditionPtr b) {
  return std::make_shared<Condition>(
      Condition{Condition::And{std::move(a), std::move(b)}});
}
ConditionPtr MakeCondOr(ConditionPtr a, ConditionPtr b) {
  return std::make_shared<Condition>(
      Condition{Condition::Or{std::move(a), std::move(b)}});
}

std::set<std::string> ConditionVars(const Condition& c) {
  return std::visit(
      [](const auto& n) -> std::set<std::string> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Condition::PropEq>) {
          return {n.var, n.var2};
        } else if constexpr (std::is_same_v<T, Condition::HasLabel>) {
          return {n.var};
        } else if constexpr (std::is_same_v<T, Condition::Not>) {
          return ConditionVars(*n.inner);
        } else {
          auto out = ConditionVars(*n.left);
          auto right = ConditionVars(*n.right);
          out.insert(right.begin(), right.end());
          return out;
        }
      },
      c.node);
}

PatternPtr MakeNode(std::string var) {
  return std::make_shared<Pattern>(Pattern{Pattern::Node{std::move(var)}});
}
PatternPtr MakeFwdEdge(std::string var) {
  return std::make_shared<Pattern>(Pattern{Pattern::FwdEdge{std::move(var)}});
}
PatternPtr MakeBwdEdge(std::string var) {
  return std::make_shared<Pattern>(Pattern{Pattern::BwdEdge{std::move(var)}});
}
PatternPtr MakeConcat(PatternPtr a, PatternPtr b) {
  return std::make_shared<Pattern>(
      Pattern{Pattern::Concat{std::move(a), std::move(b)}});
}
PatternPtr MakeAlt(PatternPtr a, PatternPtr b) {
  return std::make_shared<Pattern>(
      Pattern{Pattern::Alt{std::move(a), std::move(b)}});
}
PatternPtr MakeRepeat(PatternPtr body, size_t lo, RepeatBound hi) {
  return std::make_shared<Pattern>(
      Pattern{Pattern::Repeat{std::move(body), lo, hi}});
}
PatternPtr MakeStar(PatternPtr body) {
  return MakeRepeat(std::move(body), 0, std::nullopt);
}
PatternPtr MakeFilter(PatternPtr body, ConditionPtr cond) {
  return std::make_shared<Pattern>(
      Pattern{Pattern::Filter{std::move(body), std::move(cond)}});
}

std::set<std::string> SchemaOf(const Pattern& p) {
  return std::visit(
      [](const auto& n) -> std::set<std::string> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Pattern::Node> ||
                      std::is_same_v<T, Pattern::FwdEdge> ||
                      std::is_same_v<T, Pattern::BwdEdge>) {
          if (n.var.empty()) return {};
          return {n.var};
        } else if constexpr (std::is_same_v<T, Pattern::Concat>) {
          auto out = SchemaOf(*n.left);
          auto right = SchemaOf(*n.right);
          out.insert(right.begin(), right.end());
          return out;
        } else if constexpr (std::is_same_v<T, Pattern::Alt>) {
          return SchemaOf(*n.left);
        } else if constexpr (std::is_same_v<T, Pattern::Repeat>) {
          return {};
        } else {
          return SchemaOf(*n.body);
        }
      },
      p.node);
}

size_t PatternSize(const Pattern& p) {
  return std::visit(
      [](const auto& n) -> size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Pattern::Concat> ||
                      std::is_same_v<T, Pattern::Alt>) {
          return 1 + PatternSize(*n.left) + PatternSize(*n.right);
        } else if constexpr (std::is_same_v<T, Pattern::Repeat> ||
                             std::is_same_v<T, Pattern::Filter>) {
          return 1 + PatternSize(*n.body);
        } else {
          return 1;
        }
      },
      p.node);
}

size_t PatternDepth(const Pattern& p) {
  return std::visit(
      [](const auto& n) -> size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Pattern::Concat> ||
                      std::is_same_v<T, Pattern::Alt>) {
          return 1 + std::max(PatternDepth(*n.left), PatternDepth(*n.right));
        } else if constexpr (std::is_same_v<T, Pattern::Repeat> ||
                             std::is_same_v<T, Pattern::Filter>) {
          return 1 + PatternDepth(*n.body);
        } else {
          return 1;
        }
      },
      p.node);
}

namespace {

std::string JoinNames(const std::set<std::string>& names) {
  std::string out = "{";
  for (const auto& n : names) {
    if (out.size() > 1) out += ",";
    out += n;
  }
  return out + "}";
}

void Collect(const Pattern& p, std::vector<StaticError>& errors) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Pattern::Concat>) {
          Collect(*n.left, errors);
          Collect(*n.right, errors);
        } else if constexpr (std::is_same_v<T, Pattern::Alt>) {
          Collect(*n.left, errors);
          Collect(*n.right, errors);
          auto l = SchemaOf(*n.left);
          auto r = SchemaOf(*n.right);
          if (l != r) {
            errors.push_back({StaticErrorKind::kSchemaMismatch,
                              "alternation joins schemas " + JoinNames(l) +
                                  " and " + JoinNames(r)});
          }
        } else if constexpr (std::is_same_v<T, Pattern::Repeat>) {
          Collect(*n.body, errors);
          if (n.hi && n.lo > *n.hi) {
            errors.push_back({StaticErrorKind::kBadRepeatBounds,
                              "repetition {" + std::to_string(n.lo) + "," +
                                  std::to_string(*n.hi) + "} has lo > hi"});
          }
        } else if constexpr (std::is_same_v<T, Pattern::Filter>) {
          Collect(*n.body, errors);
          auto schema = SchemaOf(*n.body);
          for (const auto& v : ConditionVars(*n.cond)) {
            if (v.empty()) {
              errors.push_back({StaticErrorKind::kEmptyVariableName,
                                "condition uses an empty variable name"});
            } else if (!schema.count(v)) {
              errors.push_back({StaticErrorKind::kUnboundVarInCondition,
                                "condition variable '" + v +
                                    "' is not bound by the filtered pattern"});
            }
          }
        }
      },
      p.node);
}

}  // namespace

std::vector<StaticError> ValidatePattern(const Pattern& p) {
  std::vector<StaticError> errors;
  Collect(p, errors);
  return errors;
}

std::vector<StaticError> ValidateOutputPattern(const OutputPattern& op) {
  std::vector<StaticError> errors = ValidatePattern(*op.body);
  auto schema = SchemaOf(*op.body);
  for (size_t i = 0; i < op.omega.size(); ++i) {
    const OutputItem& item = op.omega[i];
    if (!schema.count(item.var)) {
      errors.push_back({StaticErrorKind::kUnboundOutputVar,
                        "output variable '" + item.var +
                            "' is not in the pattern schema"});
    }
    for (size_t j = 0; j < i; ++j) {
      if (op.omega[j] == item) {
        errors.push_back({StaticErrorKind::kDuplicateOutput,
                          "output item '" + item.var + "' appears twice"});
      }
    }
  }
  return errors;
}

void RequireValid(const OutputPattern& op) {
  auto errors = ValidateOutputPattern(op);
  if (!errors.empty()) throw Error(ErrorCode::kStaticError, errors[0].message);
}

bool ConditionEquals(const Condition& a, const Condition& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Condition::PropEq>) {
          return x.var == y.var && x.key == y.key && x.var2 == y.var2 &&
                 x.key2 == y.key2;
        } else if constexpr (std::is_same_v<T, Condition::HasLabel>) {
          return x.label == y.label && x.var == y.var;
        } else if constexpr (std::is_same_v<T, Condition::Not>) {
          return ConditionEquals(*x.inner, *y.inner);
        } else {
          return ConditionEquals(*x.left, *y.left) &&
                 ConditionEquals(*x.right, *y.right);
        }
      },
      a.node);
}

bool PatternEquals(const Pattern& a, const Pattern& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Pattern::Concat> ||
                      std::is_same_v<T, Pattern::Alt>) {
          return PatternEquals(*x.left, *y.left) &&
                 PatternEquals(*x.right, *y.right);
        } else if constexpr (std::is_same_v<T, Pattern::Repeat>) {
          return x.lo == y.lo && x.hi == y.hi && PatternEquals(*x.body, *y.body);
        } else if constexpr (std::is_same_v<T, Pattern::Filter>) {
          return PatternEquals(*x.body, *y.body) &&
                 ConditionEquals(*x.cond, *y.cond);
        } else {
          return x.var == y.var;
        }
      },
      a.node);
}

}  // namespace pgqlab
