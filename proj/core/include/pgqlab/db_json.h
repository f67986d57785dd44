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

#ifndef PGQLAB_DB_JSON_H_
#define PGQLAB_DB_JSON_H_

#include <string>
#include <string_view>

#include "pgqlab/relation.h"

namespace pgqlab {

// {"relations": {name: {"arity": k, "tuples": [[v, ...], ...]}}} with
// JSON integers as Int and JSON strings as Str. Throws kParseError or
// kArityMismatch.
Database ParseDb(std::string_view json_text);
Database LoadDb(const std::string& path);

// Compact JSON in the same format; keys and rows in sorted order.
std::string DbToJson(const Database& db);

// {"arity": k, "rows": [[...], ...]}, rows sorted.
std::string RelationToJson(const Relation& r);

}  // namespace pgqlab

#endif  // PGQLAB_DB_JSON_H_
