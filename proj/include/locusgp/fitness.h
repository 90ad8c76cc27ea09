// Copyright 2026 The LocusGP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOCUSGP_FITNESS_H_
#define LOCUSGP_FITNESS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "locusgp/ast.h"
#include "locusgp/interpreter.h"

namespace locusgp {

struct TestCase {
  std::vector<Value> args;
  Value expected;
};

using TestSuite = std::vector<TestCase>;

// (tests passed, total interpreter steps). Ordered lexicographically: more
// passes win, then fewer steps.
struct Fitness {
  std::uint32_t passed = 0;
  std::uint64_t total_steps = 0;

  friend bool operator==(const Fitness&, const Fitness&) = default;

  std::string ToString() const;
};

// True if `a` is strictly better than `b`.
inline bool Better(const Fitness& a, const Fitness& b) {
  if (a.passed != b.passed) return a.passed > b.passed;
  return a.total_steps < b.total_steps;
}

struct TestRun {
  EvalResult result;
  bool passed = false;
  std::uint64_t charged_steps = 0;  // steps if passed, else the full budget
};

// Runs every case. A test passes iff evaluation returns a value equal to the
// expectation; failing tests are charged the whole per-test budget.
std::vector<TestRun> RunSuite(const Ast& ast, const TestSuite& suite, std::uint64_t per_test_budget);

Fitness EvaluateFitness(const Ast& ast, const TestSuite& suite, std::uint64_t per_test_budget);

}  // namespace locusgp

#endif  // LOCUSGP_FITNESS_H_
