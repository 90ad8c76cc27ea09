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

#include "locusgp/compare.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <thread>

#include "locusgp/printer.h"
#include "locusgp/suite_io.h"

namespace locusgp {

namespace {

std::string Fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

std::string OrNa(const std::optional<double>& value) {
  return value ? Fixed(*value, 1) : "NA";
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2;
}

constexpr PolicyKind kPolicies[] = {PolicyKind::kUniform, PolicyKind::kStatic,
                                    PolicyKind::kDynamic};

}  // namespace

bool Improved(const RunResult& result, std::size_t suite_size) {
  const Fitness& best = *result.best.fitness;
  return best.passed == suite_size && best.total_steps < result.seed_fitness.total_steps;
}

double StepReduction(const RunResult& result, std::size_t suite_size) {
  const Fitness& best = *result.best.fitness;
  if (best.passed != suite_size || result.seed_fitness.total_steps == 0) return 0;
  double seed = static_cast<double>(result.seed_fitness.total_steps);
  return 100.0 * (seed - static_cast<double>(best.total_steps)) / seed;
}

std::string RunCsv(const RunResult& result) {
  std::string csv(CsvHeader());
  csv += '\n';
  for (const LogRecord& record : result.history) {
    csv += ToCsvRow(record);
    csv += '\n';
  }
  return csv;
}

std::string SummaryText(const RunResult& result, std::size_t suite_size,
                        const std::vector<std::string>& defaulted) {
  std::string text;
  auto line = [&](const std::string& key, const std::string& value) {
    text += key + ": " + value + "\n";
  };
  line("seed_fitness", result.seed_fitness.ToString());
  line("best_fitness", result.best.fitness->ToString());
  line("step_reduction", Fixed(StepReduction(result, suite_size), 2) + "%");
  line("improved", Improved(result, suite_size) ? "yes" : "no");
  line("evaluations", std::to_string(result.evaluations));
  line("generations", std::to_string(result.generations_run));
  line("termination", std::string(ToString(result.termination)));
  line("evals_to_first_improvement", result.evals_to_first_improvement
                                         ? std::to_string(*result.evals_to_first_improvement)
                                         : "NA");
  line("evals_to_best", std::to_string(result.evals_to_best));
  line("best_nodes", std::to_string(result.best.NodeCount()));
  line("max_nodes", std::to_string(result.max_nodes));
  std::string joined;
  for (const std::string& key : defaulted) joined += (joined.empty() ? "" : ", ") + key;
  line("defaults_applied", joined.empty() ? "none" : joined);
  return text;
}

void WriteRunArtifacts(const std::filesystem::path& dir, const RunResult& result,
                       std::size_t suite_size, const std::vector<std::string>& defaulted) {
  std::filesystem::create_directories(dir);
  WriteFile(dir / "run.csv", RunCsv(result));
  WriteFile(dir / "summary.txt", SummaryText(result, suite_size, defaulted));
  WriteFile(dir / "best.toy", Print(result.best.ast));
}

const PolicySummary& CompareResult::For(PolicyKind policy) const {
  for (const PolicySummary& summary : summaries) {
    if (summary.policy == policy) return summary;
  }
  throw std::out_of_range("no summary for policy");
}

std::optional<double> MedianOrNa(std::vector<std::optional<double>> values) {
  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end(), [](const auto& a, const auto& b) {
    if (!a) return false;
    if (!b) return true;
    return *a < *b;
  });
  std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  if (!values[mid - 1] || !values[mid]) return std::nullopt;
  return (*values[mid - 1] + *values[mid]) / 2;
}

CompareResult RunCompare(const RunConfig& base, const Ast& seed, const TestSuite& suite,
                         std::size_t seeds, const std::optional<std::filesystem::path>& out_dir,
                         std::size_t jobs) {
  if (seeds < 2) throw std::invalid_argument("compare needs at least 2 seeds");
  struct Task {
    RunConfig config;
    CompareRow row;
  };
  std::vector<Task> tasks;
  for (PolicyKind policy : kPolicies) {
    for (std::size_t i = 0; i < seeds; ++i) {
      Task task;
      task.config = base;
      task.config.policy.kind = policy;
      task.config.rng_seed = base.rng_seed + i;
      task.config.plateau_generations = 0;
      task.config.run_id = std::string(ToString(policy)) + "-" + std::to_string(task.config.rng_seed);
      task.config.Check();
      task.row.policy = policy;
      task.row.rng_seed = task.config.rng_seed;
      tasks.push_back(std::move(task));
    }
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(tasks.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        Task& task = tasks[i];
        RunResult result = Run(task.config, seed, suite);
        task.row.best = *result.best.fitness;
        task.row.seed_steps = result.seed_fitness.total_steps;
        task.row.improved = Improved(result, suite.size());
        task.row.evals_to_first_improvement = result.evals_to_first_improvement;
        task.row.evals_to_best = result.evals_to_best;
        if (out_dir) {
          WriteRunArtifacts(*out_dir / std::string(ToString(task.row.policy)) /
                                ("seed-" + std::to_string(task.row.rng_seed)),
                            result, suite.size(), {});
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
  std::vector<std::thread> threads;
  for (std::size_t j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (std::thread& thread : threads) thread.join();
  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  CompareResult result;
  for (Task& task : tasks) result.rows.push_back(task.row);
  for (PolicyKind policy : kPolicies) {
    PolicySummary summary;
    summary.policy = policy;
    std::vector<std::optional<double>> first;
    std::vector<double> to_best;
    std::vector<double> steps;
    for (const CompareRow& row : result.rows) {
      if (row.policy != policy) continue;
      ++summary.runs;
      if (row.improved) ++summary.successes;
      first.push_back(row.evals_to_first_improvement
                          ? std::optional<double>(static_cast<double>(*row.evals_to_first_improvement))
                          : std::nullopt);
      to_best.push_back(static_cast<double>(row.evals_to_best));
      steps.push_back(static_cast<double>(row.best.total_steps));
    }
    summary.median_evals_to_first_improvement = MedianOrNa(std::move(first));
    summary.median_evals_to_best = Median(std::move(to_best));
    summary.median_best_steps = Median(std::move(steps));
    result.summaries.push_back(summary);
  }

  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    WriteFile(*out_dir / "compare.csv", CompareCsv(result));
    WriteFile(*out_dir / "report.txt", CompareReport(result));
  }
  return result;
}

std::string CompareCsv(const CompareResult& result) {
  std::string csv =
      "policy,seed,best_passed,best_steps,evals_to_first_improvement,evals_to_best\n";
  for (const CompareRow& row : result.rows) {
    csv += std::string(ToString(row.policy)) + "," + std::to_string(row.rng_seed) + "," +
           std::to_string(row.best.passed) + "," + std::to_string(row.best.total_steps) + "," +
           (row.evals_to_first_improvement ? std::to_string(*row.evals_to_first_improvement)
                                           : "NA") +
           "," + std::to_string(row.evals_to_best) + "\n";
  }
  return csv;
}

std::string CompareReport(const CompareResult& result) {
  std::string text =
      "policy   runs  improved  success  median_first  median_to_best  median_best_steps\n";
  for (const PolicySummary& s : result.summaries) {
    char buffer[256];
    double rate = s.runs == 0 ? 0 : 100.0 * static_cast<double>(s.successes) /
                                        static_cast<double>(s.runs);
    std::snprintf(buffer, sizeof buffer, "%-8s %5zu %9zu %7.1f%% %13s %15.1f %18.1f\n",
                  std::string(ToString(s.policy)).c_str(), s.runs, s.successes, rate,
                  OrNa(s.median_evals_to_first_improvement).c_str(), s.median_evals_to_best,
                  s.median_best_steps);
    text += buffer;
  }
  std::optional<double> dynamic = result.For(PolicyKind::kDynamic).median_evals_to_first_improvement;
  std::optional<double> uniform = result.For(PolicyKind::kUniform).median_evals_to_first_improvement;
  text += "\ndynamic median evals to first improvement: " + OrNa(dynamic) +
          " (uniform " + OrNa(uniform) + ")\n";
  return text;
}

}  // namespace locusgp
