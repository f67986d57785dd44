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

#ifndef PGQLAB_VALUE_H_
#define PGQLAB_VALUE_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace pgqlab {

// A domain element. Every Int orders before every Str; Ints compare
// numerically and Strs by code point (UTF-8 byte order).
class Value {
 public:
  Value() : rep_(int64_t{0}) {}
  Value(int64_t i) : rep_(i) {}                  // NOLINT(runtime/explicit)
  Value(int i) : rep_(int64_t{i}) {}             // NOLINT(runtime/explicit)
  Value(std::string s) : rep_(std::move(s)) {}   // NOLINT(runtime/explicit)
  Value(const char* s) : rep_(std::string(s)) {} // NOLINT(runtime/explicit)

  bool is_int() const { return rep_.index() == 0; }
  bool is_str() const { return rep_.index() == 1; }
  int64_t as_int() const { return std::get<int64_t>(rep_); }
  const std::string& as_str() const { return std::get<std::string>(rep_); }

  friend bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

  // Text form used by the grammars: 42, "text" (with \" and \\ escaped).
  std::string ToString() const;

 private:
  std::variant<int64_t, std::string> rep_;
};

enum class Ordering { kLess, kEqual, kGreater };

Ordering CompareValues(const Value& a, const Value& b);

std::ostream& operator<<(std::ostream& os, const Value& v);

using Tuple = std::vector<Value>;

std::string TupleToString(const Tuple& t);

// Concatenation helper used throughout the evaluators.
Tuple Concat(const Tuple& a, const Tuple& b);

}  // namespace pgqlab

#endif  // PGQLAB_VALUE_H_
