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

#ifndef PGQLAB_TESTS_TEST_UTIL_H_
#define PGQLAB_TESTS_TEST_UTIL_H_

#include <string>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "pgqlab/error.h"
#include "pgqlab/harness/generators.h"
#include "pgqlab/property_graph.h"
#include "pgqlab/relation.h"

namespace pgqlab::testing {

struct EdgeSpec {
  Value id, src, tgt;
};

// Graph with unary identifiers.
PropertyGraph SmallGraph(
    const std::vector<Value>& nodes, const std::vector<EdgeSpec>& edges,
    const std::vector<std::pair<Value, Value>>& labels = {},
    const std::vector<std::tuple<Value, Value, Value>>& props = {});

// Relation of the given arity with up to max_rows rows over 1..domain.
Relation RandomRelation(harness::Rng& rng, size_t arity, size_t max_rows,
                        int domain);

Ident Id(Value v);

// Runs fn and reports whether it threw an Error with the given code.
template <typename Fn>
::testing::AssertionResult ThrowsCode(Fn&& fn, ErrorCode code) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == code) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "threw " << e.what();
  }
  return ::testing::AssertionFailure() << "did not throw";
}

}  // namespace pgqlab::testing

#endif  // PGQLAB_TESTS_TEST_UTIL_H_
