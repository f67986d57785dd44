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

#ifndef PGQLAB_HARNESS_DIFFTEST_H_
#define PGQLAB_HARNESS_DIFFTEST_H_

#include <cstdint>
#include <string>
#include <vector>

#include "pgqlab/pattern_eval.h"
#include "pgqlab/translate.h"

namespace pgqlab::harness {

struct DiffOptions {
  uint64_t seed = 1;
  size_t cases = 100;
  // Corrupts the evaluator under test, never the reference side.
  EvalOptions eval;
  // endpoint-vs-path draws an instance again when its path set is larger
  // than this; a case is skipped after eight such draws.
  size_t path_limit = 100000;
};

struct Mismatch {
  size_t index = 0;
  std::string input;
  std::string expected;
  std::string actual;
};

struct DiffReport {
  std::string suite;
  uint64_t seed = 0;
  size_t cases = 0;
  size_t skipped = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// endpoint-vs-path, pgq-to-fotc, fotc-to-pgq, strategy-agreement,
// formula-algebra, arity-preservation, tc-reflexivity, alternating,
// increasing, composite, view-validation.
const std::vector<std::string>& SuiteNames();

// Throws std::invalid_argument for a name not in SuiteNames().
DiffReport RunSuite(const std::string& suite, const DiffOptions& opts);

}  // namespace pgqlab::harness

#endif  // PGQLAB_HARNESS_DIFFTEST_H_
