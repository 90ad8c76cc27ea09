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

#ifndef LOCUSGP_ENGINE_H_
#define LOCUSGP_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "locusgp/adaptation.h"
#include "locusgp/ast.h"
#include "locusgp/fitness.h"
#include "locusgp/genome.h"
#include "locusgp/rng.h"
#include "locusgp/variation.h"

namespace locusgp {

struct RunConfig {
  std::size_t population_size = 40;
  std::size_t generations = 60;
  std::size_t tournament_k = 3;
  std::size_t elitism = 1;
  std::uint64_t per_test_budget = 20000;
  std::uint64_t rng_seed = 1;
  // Node cap as a multiple of the seed's node count; sets variation.max_nodes.
  double max_nodes_factor = 3.0;
  // Generations without a new best, after a full pass, before stopping; 0
  // disables the plateau stop.
  std::size_t plateau_generations = 25;
  VariationConfig variation;
  PolicyConfig policy;
  std::string run_id = "run";

  // Throws std::invalid_argument when an invariant does not hold.
  void Check() const;
};

using Population = std::vector<Individual>;

class RunError : public std::runtime_error {
 public:
  enum class Code { kSeedInvalid, kSeedFailsTests };

  RunError(Code code, const std::string& message, std::vector<std::size_t> failing = {})
      : std::runtime_error(message), code_(code), failing_(std::move(failing)) {}

  Code code() const { return code_; }
  // Zero-based indices of failing test cases (kSeedFailsTests).
  const std::vector<std::size_t>& failing() const { return failing_; }

 private:
  Code code_;
  std::vector<std::size_t> failing_;
};

// One CSV row: one produced offspring (or initial individual).
struct LogRecord {
  std::string run_id;
  std::size_t generation = 0;
  std::uint64_t eval_index = 0;
  PolicyKind policy = PolicyKind::kUniform;
  std::string granularity = "none";
  std::string op = "none";
  Outcome outcome = Outcome::kNeutral;
  Fitness parent;
  std::optional<Fitness> child;
  std::optional<std::size_t> child_nodes;
  std::uint64_t rng_seed = 0;
};

std::string_view CsvHeader();
std::string ToCsvRow(const LogRecord& record);

enum class TerminationReason { kGenerationsExhausted, kPerfectionPlateau };

std::string_view ToString(TerminationReason reason);

struct RunResult {
  Individual best;
  Fitness seed_fitness;
  std::vector<LogRecord> history;
  std::uint64_t evaluations = 0;
  std::size_t generations_run = 0;
  TerminationReason termination = TerminationReason::kGenerationsExhausted;
  // 1-based evaluation index of the first offspring better than the seed.
  std::optional<std::uint64_t> evals_to_first_improvement;
  // 1-based evaluation index at which `best` was produced.
  std::uint64_t evals_to_best = 1;
  std::size_t max_nodes = 0;
};

// Ranks `a` before `b`: better fitness, then fewer nodes. Both fitness caches
// must be filled.
bool RanksBefore(const Individual& a, const Individual& b);

// Picks the winner of a size-k tournament drawn uniformly with replacement;
// ties go to fewer nodes, then the earlier index. Returns an index.
std::size_t SelectParent(const Population& population, std::size_t tournament_k, Rng& rng);

// The generational loop. Offspring are produced and evaluated in slot order,
// each slot drawing from its own random stream, so a run is a pure function
// of (config, seed program, suite).
class Engine {
 public:
  // Throws RunError if the seed is invalid or fails any test.
  Engine(RunConfig config, const Ast& seed, TestSuite suite);

  // Builds the initial population: the seed itself plus single-mutation
  // variants (up to 20 attempts each, else a seed copy). The variants are
  // not candidates for best(); tracking starts with generation 1.
  void SeedPopulation();
  void StepGeneration();
  RunResult Run();

  const Population& population() const { return population_; }
  Population& mutable_population() { return population_; }
  const RunConfig& config() const { return config_; }
  const Individual& best() const { return best_; }
  const std::vector<LogRecord>& history() const { return history_; }
  std::size_t generation() const { return generation_; }

 private:
  Individual MakeSeedIndividual();
  Individual Offspring(Individual& parent, const Individual* donor, Ast child,
                       const EditRecord& edit);
  LocusSampling sampling() const;
  void Log(const std::string& granularity, const std::string& op, Outcome outcome,
           const Fitness& parent, const Individual* child);
  void NoteEvaluated(const Individual& individual);
  Individual Breed(Rng& rng);

  RunConfig config_;
  Ast seed_;
  TestSuite suite_;
  Fitness seed_fitness_;
  Population population_;
  Individual best_;
  bool has_best_ = false;
  std::vector<LogRecord> history_;
  std::size_t generation_ = 0;
  std::uint64_t next_serial_ = 0;
  std::uint64_t evals_to_best_ = 0;
  std::optional<std::uint64_t> evals_to_first_improvement_;
};

// Convenience wrapper around Engine.
RunResult Run(const RunConfig& config, const Ast& seed, const TestSuite& suite);

}  // namespace locusgp

#endif  // LOCUSGP_ENGINE_H_
