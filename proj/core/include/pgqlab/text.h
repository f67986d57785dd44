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

#ifndef PGQLAB_TEXT_H_
#define PGQLAB_TEXT_H_

#include <string>
#include <string_view>

#include "pgqlab/formula.h"
#include "pgqlab/pattern.h"
#include "pgqlab/query.h"
#include "pgqlab/relation.h"

namespace pgqlab {

// Parsers throw SyntaxError with the byte offset of the offending token.
PatternPtr ParsePattern(std::string_view text);
ConditionPtr ParseCondition(std::string_view text);
// "<pattern> OUTPUT(w1, ...)"
OutputPattern ParseOutputPattern(std::string_view text);
SelCondPtr ParseSelCond(std::string_view text);
QueryPtr ParseQuery(std::string_view text);
FormulaPtr ParseFormula(std::string_view text);

// Printers emit text the parsers read back to an equal tree.
std::string ToText(const Pattern& p);
std::string ToText(const Condition& c);
std::string ToText(const OutputPattern& op);
std::string ToText(const SelCond& c);
std::string ToText(const Query& q);
std::string ToText(const Formula& f);

// Property keys and labels print bare when they look like identifiers.
std::string KeyToText(const Value& v);

}  // namespace pgqlab

#endif  // PGQLAB_TEXT_H_
