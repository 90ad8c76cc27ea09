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

#ifndef LOCUSGP_COMPARE_H_
#define LOCUSGP_COMPARE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "locusgp/engine.h"

namespace locusgp {

// True when the best individual passes the whole suite in fewer steps than
// the seed.
bool Improved(const RunResult& result, std::size_t suite_size);

// Percentage of seed steps saved by the best individual; 0 without a full pass.
double StepReduction(const RunResult& result, std::size_t suite_size);

std::string RunCsv(const RunResult& result);
std::string SummaryText(const RunResult& result, std::size_t suite_size,
                        const std::vector<std::string>& defaulted);

// Writes run.csv, summary.txt and best.toy into `dir`, creating it.
void WriteRunArtifacts(const std::filesystem::path& dir, const RunResult& result,
                       std::size_t suite_size, const std::vector<std::string>& defaulted);

struct CompareRow {
  PolicyKind policy = PolicyKind::kUniform;
  std::uint64_t rng_seed = 0;
  Fitness best;
  std::uint64_t seed_steps = 0;
  bool improved = false;
  std::optional<std::uint64_t> evals_to_first_improvement;
  std::uint64_t evals_to_best = 0;
};

struct PolicySummary {
  PolicyKind policy = PolicyKind::kUniform;
  std::size_t runs = 0;
  std::size_t successes = 0;
  // nullopt stands for "no improvement", ranked above every number.
  std::optional<double> median_evals_to_first_improvement;
  double median_evals_to_best = 0;
  double median_best_steps = 0;
};

struct CompareResult {
  std::vector<CompareRow> rows;
  std::vector<PolicySummary> summaries;

  const PolicySummary& For(PolicyKind policy) const;
};

// Median where nullopt sorts after every value; nullopt if the median falls
// on one.
std::optional<double> MedianOrNa(std::vector<std::optional<double>> values);

// Runs the uniform, static and dynamic policies for seeds base.rng_seed ..
// base.rng_seed + seeds - 1. Every run gets the same population size and
// generation count and runs to the end. Results do not depend on `jobs`.
// When `out_dir` is set, writes compare.csv, report.txt and one directory
// per run.
CompareResult RunCompare(const RunConfig& base, const Ast& seed, const TestSuite& suite,
                         std::size_t seeds, const std::optional<std::filesystem::path>& out_dir,
                         std::size_t jobs = 1);

std::string CompareCsv(const CompareResult& result);
std::string CompareReport(const CompareResult& result);

}  // namespace locusgp

#endif  // LOCUSGP_COMPARE_H_
