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

#include "pgqlab/db_json.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pgqlab/error.h"

namespace pgqlab {

namespace {

using nlohmann::json;

Value FromJson(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Value(v.get<int64_t>());
  if (v.is_string()) return Value(v.get<std::string>());
  throw Error(ErrorCode::kParseError,
              where + ": values must be integers or strings");
}

json ToJson(const Value& v) {
  if (v.is_int()) return v.as_int();
  return v.as_str();
}

json RowsJson(const Relation& r) {
  json rows = json::array();
  for (const auto& t : r.rows()) {
    json row = json::array();
    for (const auto& v : t) row.push_back(ToJson(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Database ParseDb(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError,
                "at offset " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("relations") ||
      !doc["relations"].is_object()) {
    throw Error(ErrorCode::kParseError,
                "expected an object with a \"relations\" object");
  }
  Database db;
  for (const auto& [name, body] : doc["relations"].items()) {
    if (!body.is_object() || !body.contains("arity") ||
        !body["arity"].is_number_unsigned() || !body.contains("tuples") ||
        !body["tuples"].is_array()) {
      throw Error(ErrorCode::kParseError,
                  "relation " + name + ": needs \"arity\" and \"tuples\"");
    }
    size_t arity = body["arity"].get<size_t>();
    Relation rel(arity);
    size_t index = 0;
    for (const auto& row : body["tuples"]) {
      std::string where = "relation " + name + " row " + std::to_string(index);
      if (!row.is_array()) throw Error(ErrorCode::kParseError, where);
      if (row.size() != arity) {
        throw Error(ErrorCode::kArityMismatch,
                    where + " has " + std::to_string(row.size()) +
                        " values, arity is " + std::to_string(arity));
      }
      Tuple t;
      for (const auto& v : row) t.push_back(FromJson(v, where));
      rel.Insert(std::move(t));
      ++index;
    }
    db.Put(name, std::move(rel));
  }
  return db;
}

Database LoadDb(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseDb(ss.str());
}

std::string DbToJson(const Database& db) {
  json rels = json::object();
  for (const auto& [name, r] : db.relations()) {
    rels[name] = {{"arity", r.arity()}, {"tuples", RowsJson(r)}};
  }
  return json{{"relations", rels}}.dump();
}

std::string RelationToJson(const Relation& r) {
  return json{{"arity", r.arity()}, {"rows", RowsJson(r)}}.dump();
}

}  // namespace pgqlab
