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

// Acceptance harness: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <atomic>
#include <limits>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "locusgp/adaptation.h"
#include "locusgp/benchmarks.h"
#include "locusgp/compare.h"
#include "locusgp/engine.h"
#include "locusgp/interpreter.h"
#include "locusgp/parser.h"
#include "locusgp/printer.h"
#include "locusgp/suite_io.h"
#include "locusgp/validator.h"
#include "locusgp/variation.h"
#include "support/oracle.h"
#include "support/random_program.h"

namespace locusgp {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Pinned thresholds.
constexpr double kA1Seconds = 30;
constexpr int kA1Programs = 200;
constexpr std::uint64_t kA1Budget = 5000;
constexpr double kA2Seconds = 60;
constexpr int kA2RoundTrips = 1000;
constexpr int kA2Products = 10000;
constexpr double kA3Seconds = 120;
constexpr int kA3Seeds = 50;
constexpr int kA3Cycles = 300;
constexpr int kA3Required = 45;
constexpr double kA4Seconds = 300;
constexpr int kA4Seeds = 20;
constexpr int kA4Required = 18;
constexpr double kA4MedianReduction = 20.0;
constexpr double kA5Seconds = 600;
constexpr std::size_t kA5Seeds = 30;

int failures = 0;

void Report(const char* id, bool pass, const std::string& detail) {
  std::printf("%s %s  %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Format(const char* format, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, format, args...);
  return buffer;
}

LoadedProgram Load(const std::string& name) {
  BenchmarkSpec spec = *FindBenchmark(name);
  return LoadProgram(spec.program_path, spec.suite_path);
}

std::size_t Jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// Per-run evidence collected for A7 and A8.
struct Audit {
  std::size_t runs = 0;
  std::size_t oversize = 0;
  std::size_t best_failing = 0;

  void Add(const RunResult& result, std::size_t suite_size) {
    ++runs;
    if (result.best.fitness->passed != suite_size) ++best_failing;
    for (const LogRecord& record : result.history) {
      if (record.child_nodes && *record.child_nodes > result.max_nodes) ++oversize;
    }
  }
};

Audit audit;

void A1() {
  auto start = Clock::now();
  Rng rng(20260101);
  int mismatches = 0;
  for (int i = 0; i < kA1Programs; ++i) {
    Ast ast = testing::RandomProgram(rng);
    std::vector<Value> args = testing::RandomArgs(ast, rng);
    EvalResult r = Evaluate(ast, args, kA1Budget);
    testing::OracleResult o = testing::OracleEvaluate(ast, args, kA1Budget);
    Trace trace;
    for (NodeId id : o.visits) trace.Add(id);
    bool same = r.steps == o.steps() && r.outcome == o.outcome && r.value == o.value &&
                r.trace == trace;
    if (r.outcome == EvalResult::Outcome::kRuntimeError) same = same && r.error == o.error;
    mismatches += !same;
  }
  double elapsed = Seconds(start);
  Report("A1", mismatches == 0 && elapsed < kA1Seconds,
         Format("oracle mismatches %d/%d, %.1fs (limit %.0fs)", mismatches, kA1Programs, elapsed,
                kA1Seconds));
}

bool Malformed(const Ast& ast, std::size_t max_nodes, const ValidationReport& report) {
  for (const Violation& v : report.violations) {
    if (v.reason == ViolationReason::kArityError) return true;
  }
  return ast.NodeCount() > max_nodes &&
         std::none_of(report.violations.begin(), report.violations.end(),
                      [](const Violation& v) { return v.reason == ViolationReason::kSizeExceeded; });
}

void A2() {
  auto start = Clock::now();
  Rng rng(20260202);
  int round_trip_failures = 0;
  for (int i = 0; i < kA2RoundTrips; ++i) {
    Ast ast = testing::RandomProgram(rng);
    try {
      Ast again = Parse(Print(ast));
      round_trip_failures += !StructurallyEqual(ast.root(), again.root());
    } catch (const ParseError&) {
      ++round_trip_failures;
    }
  }

  std::vector<LoadedProgram> seeds;
  for (const BenchmarkSpec& spec : BundledBenchmarks()) {
    seeds.push_back(LoadProgram(spec.program_path, spec.suite_path));
  }
  int malformed = 0;
  int products = 0;
  int invalid = 0;
  // pool[i] derives from seeds[origin[i]]; crossover pairs share an origin.
  std::vector<Individual> pool;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    Individual individual;
    individual.ast = seeds[i].ast;
    individual.mask = DefaultMask(seeds[i].ast, 1.0);
    pool.push_back(individual);
    origin.push_back(i);
  }
  while (products < kA2Products) {
    std::size_t a = rng.Below(pool.size());
    VariationConfig config = VariationConfig::ForSeed(seeds[origin[a]].ast.NodeCount());
    VariationResult result;
    std::optional<std::size_t> donor;
    if (rng.Bernoulli(0.3)) {
      std::vector<std::size_t> partners;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (origin[i] == origin[a]) partners.push_back(i);
      }
      donor = partners[rng.Below(partners.size())];
      result = Crossover(pool[a], pool[*donor], rng, config, LocusSampling::kWeighted);
    } else {
      auto granularity = static_cast<Granularity>(rng.Below(3));
      result = Mutate(pool[a], granularity, rng, config, LocusSampling::kWeighted);
    }
    if (result.status == VariationStatus::kNoEligibleLocus) continue;
    ++products;
    if (!result.ok()) continue;  // kOversize: reported, never built
    ValidationReport report = Validate(*result.child, config.max_nodes);
    malformed += Malformed(*result.child, config.max_nodes, report);
    if (!report.valid) {
      ++invalid;
      continue;
    }
    // Keep some valid products so later edits apply to edited trees.
    if (pool.size() < 400 && rng.Bernoulli(0.25)) {
      Individual child;
      child.ast = *result.child;
      child.mask = InheritMask(pool[a].mask, donor ? &pool[*donor].mask : nullptr, child.ast,
                               result.edit, 1.0);
      pool.push_back(std::move(child));
      origin.push_back(origin[a]);
    }
  }
  double elapsed = Seconds(start);
  Report("A2", round_trip_failures == 0 && malformed == 0 && elapsed < kA2Seconds,
         Format("round-trip failures %d/%d, malformed %d/%d (declared invalid %d), %.1fs "
                "(limit %.0fs)",
                round_trip_failures, kA2RoundTrips, malformed, products, invalid, elapsed,
                kA2Seconds));
}

// Single-statement edits outside the hot statement: deletion, operator
// swaps, literal replacements and negation. Returns the number of valid
// edits whose suite fitness differs from the seed's.
int NonHotEditsThatMatter(const LoadedProgram& p, NodeId hot, int* checked) {
  Fitness seed = EvaluateFitness(p.ast, p.suite, 20000);
  AstIndex index(p.ast.root());
  std::vector<NodeId> candidates;
  for (const Node* node : index.preorder()) {
    if (node->kind == NodeKind::kProgram || node->kind == NodeKind::kParam) continue;
    if (node->id == p.ast.body().id) continue;
    if (index.InSubtree(node->id, hot)) continue;
    candidates.push_back(node->id);
  }
  int differing = 0;
  auto try_edit = [&](const std::function<bool(Ast&)>& edit) {
    Ast copy = p.ast;
    if (!edit(copy)) return;
    if (!Validate(copy, p.ast.NodeCount() * 2).valid) return;
    ++*checked;
    if (ClassifyOutcome(seed, EvaluateFitness(copy, p.suite, 20000), true) != Outcome::kNeutral) {
      ++differing;
    }
  };
  for (NodeId id : candidates) {
    const Node& node = *index.Find(id);
    if (IsStatement(node.kind)) {
      try_edit([&](Ast& ast) {
        std::optional<NodeId> parent = AstIndex(ast.root()).Parent(id);
        Node* block = FindNode(ast.mutable_root(), *parent);
        auto& children = block->children;
        children.erase(std::find_if(children.begin(), children.end(),
                                    [&](const Node& n) { return n.id == id; }));
        return true;
      });
    }
    if (node.kind == NodeKind::kBinary) {
      for (int op = 0; op <= static_cast<int>(BinaryOp::kOr); ++op) {
        if (op == static_cast<int>(node.binary_op)) continue;
        try_edit([&](Ast& ast) {
          FindNode(ast.mutable_root(), id)->binary_op = static_cast<BinaryOp>(op);
          return true;
        });
      }
    }
    if (node.kind == NodeKind::kIntLit) {
      for (std::int64_t value : {-3, -1, 0, 1, 2, 5, 100}) {
        if (value == node.value) continue;
        try_edit([&](Ast& ast) {
          FindNode(ast.mutable_root(), id)->value = value;
          return true;
        });
      }
    }
    if (IsExpression(node.kind)) {
      try_edit([&](Ast& ast) {
        Node* target = FindNode(ast.mutable_root(), id);
        Node negated = MakeUnary(UnaryOp::kNeg, *target);
        negated.id = ast.FreshId();
        *target = std::move(negated);
        return true;
      });
    }
  }
  return differing;
}

void A3() {
  auto start = Clock::now();
  LoadedProgram p = Load("hotlocus");
  PolicyConfig policy;
  VariationConfig variation = VariationConfig::ForSeed(p.ast.NodeCount());
  Fitness seed_fitness = EvaluateFitness(p.ast, p.suite, 20000);
  NodeId hot = p.ast.body().children[0].id;
  AstIndex index(p.ast.root());

  int checked = 0;
  int influential = NonHotEditsThatMatter(p, hot, &checked);

  int converged = 0;
  for (int s = 1; s <= kA3Seeds; ++s) {
    Individual individual;
    individual.ast = p.ast;
    individual.mask = DefaultMask(p.ast, 1.0, policy.bounds);
    individual.fitness = seed_fitness;
    Rng rng = Rng::ForStream(static_cast<std::uint64_t>(s), 0);
    for (int cycle = 0; cycle < kA3Cycles; ++cycle) {
      Granularity granularity = SampleGranularity(
          individual.mask.at(individual.ast.root().id).granularity, policy, rng);
      VariationResult r = Mutate(individual, granularity, rng, variation, LocusSampling::kWeighted);
      if (r.status == VariationStatus::kNoEligibleLocus) continue;
      if (!r.ok() || !Validate(*r.child, variation.max_nodes).valid) {
        RecordOutcome(nullptr, individual, r.edit, Outcome::kInvalid, false, policy);
        continue;
      }
      Fitness f = EvaluateFitness(*r.child, p.suite, 20000);
      Outcome outcome = ClassifyOutcome(seed_fitness, f, true);
      RecordOutcome(nullptr, individual, r.edit, outcome, Better(seed_fitness, f), policy);
    }
    // Argmax over pre-order; ties go to the earliest node.
    NodeId argmax{};
    double best = -1;
    for (const Node* node : index.preorder()) {
      double w = individual.mask.weight(node->id);
      if (w > best) {
        best = w;
        argmax = node->id;
      }
    }
    converged += index.InSubtree(argmax, hot);
  }
  double elapsed = Seconds(start);
  Report("A3", converged >= kA3Required && influential == 0 && checked > 0 && elapsed < kA3Seconds,
         Format("argmax in hot statement %d/%d (need %d), non-hot edits changing fitness %d/%d, "
                "%.1fs (limit %.0fs)",
                converged, kA3Seeds, kA3Required, influential, checked, elapsed, kA3Seconds));
}

void A4() {
  auto start = Clock::now();
  LoadedProgram p = Load("deadcode");
  std::vector<RunResult> results(kA4Seeds);
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < Jobs(); ++w) {
    workers.emplace_back([&] {
      for (int i = next++; i < kA4Seeds; i = next++) {
        RunConfig config;
        config.population_size = 40;
        config.generations = 60;
        config.policy.kind = PolicyKind::kUniform;
        config.rng_seed = static_cast<std::uint64_t>(i + 1);
        results[i] = Run(config, p.ast, p.suite);
      }
    });
  }
  for (std::thread& t : workers) t.join();
  int improved = 0;
  std::vector<double> reductions;
  for (const RunResult& r : results) {
    audit.Add(r, p.suite.size());
    improved += Improved(r, p.suite.size());
    reductions.push_back(StepReduction(r, p.suite.size()));
  }
  std::sort(reductions.begin(), reductions.end());
  double median = (reductions[kA4Seeds / 2 - 1] + reductions[kA4Seeds / 2]) / 2;
  double elapsed = Seconds(start);
  Report("A4",
         improved >= kA4Required && median >= kA4MedianReduction && elapsed < kA4Seconds,
         Format("improved %d/%d (need %d), median step reduction %.2f%% (need %.0f%%), %.1fs "
                "(limit %.0fs)",
                improved, kA4Seeds, kA4Required, median, kA4MedianReduction, elapsed,
                kA4Seconds));
}

std::string Na(const std::optional<double>& value) {
  return value ? Format("%.1f", *value) : std::string("NA");
}

void A5(const fs::path& out) {
  auto start = Clock::now();
  LoadedProgram p = Load("hotlocus");
  RunConfig config;
  CompareResult compare = RunCompare(config, p.ast, p.suite, kA5Seeds, out, Jobs());
  double elapsed = Seconds(start);
  const PolicySummary& dynamic = compare.For(PolicyKind::kDynamic);
  const PolicySummary& uniform = compare.For(PolicyKind::kUniform);
  const PolicySummary& fixed = compare.For(PolicyKind::kStatic);
  auto rank = [](const std::optional<double>& v) {
    return v ? *v : std::numeric_limits<double>::infinity();
  };
  bool ok = rank(dynamic.median_evals_to_first_improvement) <=
                rank(uniform.median_evals_to_first_improvement) &&
            dynamic.median_evals_to_first_improvement.has_value() &&
            fs::exists(out / "report.txt") && elapsed < kA5Seconds;
  Report("A5", ok,
         Format("median evals to first improvement: dynamic %s, uniform %s, static %s "
                "(reported); successes %zu/%zu/%zu; %.1fs (limit %.0fs)",
                Na(dynamic.median_evals_to_first_improvement).c_str(),
                Na(uniform.median_evals_to_first_improvement).c_str(),
                Na(fixed.median_evals_to_first_improvement).c_str(), dynamic.successes,
                uniform.successes, fixed.successes, elapsed, kA5Seconds));
}

// Scans every run.csv and summary.txt below `root` for A7 and A8.
void AuditArtifacts(const fs::path& root, std::size_t suite_size) {
  for (const fs::directory_entry& entry : fs::recursive_directory_iterator(root)) {
    if (entry.path().filename() != "summary.txt") continue;
    ++audit.runs;
    std::string summary = ReadFile(entry.path().string());
    std::size_t max_nodes = 0;
    std::istringstream lines(summary);
    for (std::string line; std::getline(lines, line);) {
      if (line.starts_with("max_nodes: ")) max_nodes = std::stoul(line.substr(11));
      if (line.starts_with("best_fitness: ")) {
        std::string expected = "best_fitness: (" + std::to_string(suite_size) + ",";
        if (!line.starts_with(expected)) ++audit.best_failing;
      }
    }
    std::istringstream csv(ReadFile((entry.path().parent_path() / "run.csv").string()));
    std::string row;
    std::getline(csv, row);
    while (std::getline(csv, row)) {
      std::vector<std::string> fields;
      std::istringstream cells(row);
      for (std::string cell; std::getline(cells, cell, ',');) fields.push_back(cell);
      if (fields.size() > 11 && !fields[11].empty() && std::stoul(fields[11]) > max_nodes) {
        ++audit.oversize;
      }
    }
  }
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void A6(const fs::path& out) {
  LoadedProgram p = Load("hoist");
  RunConfig config;
  config.population_size = 20;
  config.generations = 20;
  config.rng_seed = 7;
  bool same = true;
  std::string runs[2];
  std::string compares[2];
  for (int i = 0; i < 2; ++i) {
    fs::path dir = out / ("a6-" + std::to_string(i));
    RunResult result = Run(config, p.ast, p.suite);
    WriteRunArtifacts(dir / "run", result, p.suite.size(), {});
    RunCompare(config, p.ast, p.suite, 3, dir / "compare", i == 0 ? 1 : Jobs());
    runs[i] = Slurp(dir / "run/run.csv");
    compares[i] = Slurp(dir / "compare/compare.csv");
  }
  same = !runs[0].empty() && runs[0] == runs[1] && !compares[0].empty() &&
         compares[0] == compares[1];
  Report("A6", same,
         Format("run.csv %s (%zu bytes), compare.csv %s (%zu bytes)",
                runs[0] == runs[1] ? "identical" : "differs", runs[0].size(),
                compares[0] == compares[1] ? "identical" : "differs", compares[0].size()));
}

}  // namespace
}  // namespace locusgp

int main() {
  using namespace locusgp;
  fs::path out = fs::temp_directory_path() / ("locusgp-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(out);
  fs::create_directories(out);

  A1();
  A2();
  A3();
  A4();
  A5(out / "a5");
  AuditArtifacts(out / "a5", Load("hotlocus").suite.size());
  A6(out);

  Report("A7", audit.oversize == 0,
         Format("logged individuals above max_nodes: %zu across %zu runs", audit.oversize,
                audit.runs));
  Report("A8", audit.best_failing == 0,
         Format("runs whose best fails a test: %zu across %zu runs", audit.best_failing,
                audit.runs));
  fs::remove_all(out);
  return failures == 0 ? 0 : 1;
}
