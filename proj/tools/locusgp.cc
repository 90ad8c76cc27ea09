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

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "locusgp/adaptation.h"
#include "locusgp/benchmarks.h"
#include "locusgp/compare.h"
#include "locusgp/config.h"
#include "locusgp/engine.h"
#include "locusgp/fitness.h"
#include "locusgp/genome.h"
#include "locusgp/parser.h"
#include "locusgp/printer.h"
#include "locusgp/suite_io.h"
#include "locusgp/validator.h"

namespace fs = std::filesystem;
using namespace locusgp;

namespace {

constexpr int kExitError = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LoadedProgram LoadChecked(const std::string& program, const std::string& tests) {
  LoadedProgram loaded;
  try {
    loaded.ast = Parse(ReadFile(program));
  } catch (const ParseError& e) {
    throw UsageError(program + ": " + e.what());
  }
  ValidationReport report = Validate(loaded.ast, loaded.ast.NodeCount());
  if (!report.valid) {
    std::string message = program + ": invalid program";
    for (const Violation& v : report.violations) {
      message += "\n  node " + std::to_string(v.node.value) + ": " +
                 std::string(ToString(v.reason)) + " " + v.detail;
    }
    throw UsageError(message);
  }
  try {
    loaded.suite = ParseSuite(ReadFile(tests));
  } catch (const SuiteError& e) {
    throw UsageError(tests + ": " + e.what());
  }
  return loaded;
}

LoadedConfig LoadConfig(const std::string& path) {
  if (path.empty()) return ParseConfig("");
  try {
    return ParseConfig(ReadFile(path));
  } catch (const ConfigError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string Status(const TestRun& run) {
  if (run.passed) return "pass";
  switch (run.result.outcome) {
    case EvalResult::Outcome::kOk:
      return "fail";
    case EvalResult::Outcome::kRuntimeError:
      return std::string(ToString(run.result.error));
    case EvalResult::Outcome::kBudgetExceeded:
      return "budgetExceeded";
  }
  return "fail";
}

int CmdEval(const std::string& program, const std::string& tests, std::uint64_t budget) {
  LoadedProgram loaded = LoadChecked(program, tests);
  std::vector<TestRun> runs = RunSuite(loaded.ast, loaded.suite, budget);
  Fitness fitness = EvaluateFitness(loaded.ast, loaded.suite, budget);
  std::cout << "passed " << fitness.passed << "/" << loaded.suite.size() << "\n";
  std::cout << "totalSteps " << fitness.total_steps << "\n";
  std::cout << "#\targs\texpected\tgot\tsteps\tstatus\n";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const TestRun& run = runs[i];
    std::cout << i + 1 << "\t" << FormatArgs(loaded.suite[i].args) << "\t"
              << loaded.suite[i].expected.ToString() << "\t"
              << (run.result.value ? run.result.value->ToString() : "-") << "\t"
              << run.result.steps << "\t" << Status(run) << "\n";
  }
  return fitness.passed == loaded.suite.size() ? 0 : 1;
}

int CmdTrace(const std::string& program, const std::string& tests, std::uint64_t budget) {
  LoadedProgram loaded = LoadChecked(program, tests);
  Trace hits;
  for (const TestRun& run : RunSuite(loaded.ast, loaded.suite, budget)) hits.Merge(run.result.trace);
  std::cout << "# hits: nodeId\thits\tsource\n";
  AstIndex index(loaded.ast.root());
  for (const Node* node : index.preorder()) {
    std::cout << node->id.value << "\t" << hits.count(node->id) << "\t" << Snippet(*node) << "\n";
  }
  std::cout << "# total hits " << hits.Total() << "\n";
  std::cout << "# static mask: nodeId\tweight\tgExpr,gStmt,gBlock\tsource\n";
  std::cout << DumpMask(StaticMask(loaded.ast, loaded.suite, budget), loaded.ast);
  return 0;
}

int CmdImprove(const std::string& program, const std::string& tests, const std::string& config_path,
               const std::string& out) {
  LoadedProgram loaded = LoadChecked(program, tests);
  LoadedConfig config = LoadConfig(config_path);
  RunResult result;
  try {
    result = Run(config.config, loaded.ast, loaded.suite);
  } catch (const RunError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (std::size_t i : e.failing()) {
      std::cerr << "  test " << i + 1 << ": " << FormatArgs(loaded.suite[i].args) << " -> "
                << loaded.suite[i].expected.ToString() << "\n";
    }
    return kExitError;
  }
  WriteRunArtifacts(out, result, loaded.suite.size(), config.defaulted);
  std::cout << SummaryText(result, loaded.suite.size(), config.defaulted);
  return Improved(result, loaded.suite.size()) ? 0 : 1;
}

int CmdCompare(const std::vector<std::string>& inputs, const std::string& config_path,
               std::size_t seeds, const std::string& out, std::size_t jobs) {
  std::string program;
  std::string tests;
  if (inputs.size() == 1) {
    std::optional<BenchmarkSpec> spec = FindBenchmark(inputs[0]);
    if (!spec) throw UsageError("unknown benchmark '" + inputs[0] + "'");
    program = spec->program_path.string();
    tests = spec->suite_path.string();
  } else if (inputs.size() == 2) {
    program = inputs[0];
    tests = inputs[1];
  } else {
    throw UsageError("compare takes a benchmark name or a program and a tests file");
  }
  if (seeds < 2) throw UsageError("--seeds must be at least 2");
  LoadedProgram loaded = LoadChecked(program, tests);
  LoadedConfig config = LoadConfig(config_path);
  CompareResult result = RunCompare(config.config, loaded.ast, loaded.suite, seeds, fs::path(out), jobs);
  std::cout << CompareReport(result);
  return 0;
}

int CmdBench(std::uint64_t budget) {
  std::printf("%-10s %6s %6s %11s  %s\n", "name", "nodes", "tests", "seed_steps", "known_improvement");
  for (const BenchmarkSpec& spec : BundledBenchmarks()) {
    LoadedProgram loaded = LoadChecked(spec.program_path.string(), spec.suite_path.string());
    Fitness fitness = EvaluateFitness(loaded.ast, loaded.suite, budget);
    std::printf("%-10s %6zu %6zu %11llu  %s\n", spec.name.c_str(), loaded.ast.NodeCount(),
                loaded.suite.size(), static_cast<unsigned long long>(fitness.total_steps),
                spec.known_improvement.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locus-weighted genetic improvement for ToyLang programs"};
  app.require_subcommand(1);

  std::string program;
  std::string tests;
  std::string config_path;
  std::string out = "out";
  std::uint64_t budget = RunConfig{}.per_test_budget;
  std::size_t seeds = 30;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> inputs;

  auto add_files = [&](CLI::App* sub) {
    sub->add_option("program", program, "ToyLang source file")->required();
    sub->add_option("tests", tests, "test-suite file")->required();
  };

  CLI::App* eval = app.add_subcommand("eval", "run a program on its test suite");
  add_files(eval);
  eval->add_option("--budget", budget, "per-test step budget")->check(CLI::PositiveNumber);

  CLI::App* trace = app.add_subcommand("trace", "print node hit counts and the static mask");
  add_files(trace);
  trace->add_option("--budget", budget, "per-test step budget")->check(CLI::PositiveNumber);

  CLI::App* improve = app.add_subcommand("improve", "search for a faster variant");
  add_files(improve);
  improve->add_option("--config", config_path, "key = value config file");
  improve->add_option("--out", out, "output directory");

  CLI::App* compare = app.add_subcommand("compare", "compare locus policies over many seeds");
  compare->add_option("inputs", inputs, "benchmark name, or program and tests files")->required();
  compare->add_option("--config", config_path, "key = value config file");
  compare->add_option("--seeds", seeds, "runs per policy");
  compare->add_option("--out", out, "output directory");
  compare->add_option("--jobs", jobs, "concurrent runs")->check(CLI::PositiveNumber);

  CLI::App* bench = app.add_subcommand("bench", "list the bundled benchmarks");
  bench->add_option("--budget", budget, "per-test step budget")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*eval) return CmdEval(program, tests, budget);
    if (*trace) return CmdTrace(program, tests, budget);
    if (*improve) return CmdImprove(program, tests, config_path, out);
    if (*compare) return CmdCompare(inputs, config_path, seeds, out, jobs);
    if (*bench) return CmdBench(budget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
