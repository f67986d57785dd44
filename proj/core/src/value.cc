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

#include "pgqlab/value.h"

#include <sstream>

namespace pgqlab {

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.rep_.index() != b.rep_.index()) {
    return a.rep_.index() <=> b.rep_.index();
  }
  if (a.is_int()) return a.as_int() <=> b.as_int();
  // std::string compares through char_traits<char>, i.e. as unsigned bytes.
  int c = a.as_str().compare(b.as_str());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

Ordering CompareValues(const Value& a, const Value& b) {
  auto c = a <=> b;
  if (c < 0) return Ordering::kLess;
  if (c > 0) return Ordering::kGreater;
  return Ordering::kEqual;
}

std::string Value::ToString() const {
  if (is_int()) return std::to_string(as_int());
  std::string out = "\"";
  for (char ch : as_str()) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

std::ostream& operator<<(std::ostream& os, const Value& v) {
  return os << v.ToString();
}

std::string TupleToString(const Tuple& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ",";
    os << t[i];
  }
  os << ")";
  return os.str();
}

Tuple Concat(const Tuple& a, const Tuple& b) {
  Tuple out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace pgqlab
