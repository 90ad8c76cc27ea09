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

#include "locusgp/fitness.h"

namespace locusgp {

std::string Fitness::ToString() const {
  return "(" + std::to_string(passed) + ", " + std::to_string(total_steps) + ")";
}

std::vector<TestRun> RunSuite(const Ast& ast, const TestSuite& suite,
                              std::uint64_t per_test_budget) {
  std::vector<TestRun> runs;
  runs.reserve(suite.size());
  for (const TestCase& test : suite) {
    TestRun run;
    run.result = Evaluate(ast, test.args, per_test_budget);
    run.passed = run.result.ok() && *run.result.value == test.expected;
    run.charged_steps = run.passed ? run.result.steps : per_test_budget;
    runs.push_back(std::move(run));
  }
  return runs;
}

Fitness EvaluateFitness(const Ast& ast, const TestSuite& suite, std::uint64_t per_test_budget) {
  Fitness fitness;
  for (const TestCase& test : suite) {
    EvalResult result = Evaluate(ast, test.args, per_test_budget);
    if (result.ok() && *result.value == test.expected) {
      ++fitness.passed;
      fitness.total_steps += result.steps;
    } else {
      fitness.total_steps += per_test_budget;
    }
  }
  return fitness;
}

}  // namespace locusgp
