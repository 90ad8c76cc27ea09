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

#include "locusgp/engine.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "locusgp/validator.h"

namespace locusgp {

void RunConfig::Check() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (population_size < 1) fail("population_size must be positive");
  if (elitism > population_size) fail("elitism must not exceed population_size");
  if (tournament_k < 1) fail("tournament_k must be positive");
  if (per_test_budget < 1) fail("per_test_budget must be positive");
  if (max_nodes_factor < 1.0) fail("max_nodes_factor must be at least 1");
  if (variation.max_fresh_expr_depth < 1) fail("max_expr_depth must be at least 1");
  auto is_rate = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!is_rate(variation.mutation_rate) || !is_rate(variation.crossover_rate)) {
    fail("rates must lie in [0, 1]");
  }
  if (!policy.bounds.Contains(variation.w0)) fail("w0 must lie inside [w_min, w_max]");
  policy.Check();
}

std::string_view CsvHeader() {
  return "run_id,generation,eval_index,policy,granularity,operator,outcome,parent_passed,"
         "parent_steps,child_passed,child_steps,child_nodes,rng_seed";
}

std::string ToCsvRow(const LogRecord& r) {
  std::string row = r.run_id;
  auto field = [&row](const std::string& value) {
    row += ',';
    row += value;
  };
  field(std::to_string(r.generation));
  field(std::to_string(r.eval_index));
  field(std::string(ToString(r.policy)));
  field(r.granularity);
  field(r.op);
  field(std::string(ToString(r.outcome)));
  field(std::to_string(r.parent.passed));
  field(std::to_string(r.parent.total_steps));
  field(r.child ? std::to_string(r.child->passed) : "");
  field(r.child ? std::to_string(r.child->total_steps) : "");
  field(r.child_nodes ? std::to_string(*r.child_nodes) : "");
  field(std::to_string(r.rng_seed));
  return row;
}

std::string_view ToString(TerminationReason reason) {
  return reason == TerminationReason::kGenerationsExhausted ? "generationsExhausted"
                                                            : "perfectionPlateau";
}

bool RanksBefore(const Individual& a, const Individual& b) {
  if (Better(*a.fitness, *b.fitness)) return true;
  if (Better(*b.fitness, *a.fitness)) return false;
  return a.NodeCount() < b.NodeCount();
}

std::size_t SelectParent(const Population& population, std::size_t tournament_k, Rng& rng) {
  std::size_t winner = rng.Below(population.size());
  for (std::size_t i = 1; i < tournament_k; ++i) {
    std::size_t contender = rng.Below(population.size());
    const Individual& c = population[contender];
    const Individual& w = population[winner];
    if (RanksBefore(c, w) || (!RanksBefore(w, c) && contender < winner)) winner = contender;
  }
  return winner;
}

Engine::Engine(RunConfig config, const Ast& seed, TestSuite suite)
    : config_(std::move(config)), seed_(seed), suite_(std::move(suite)) {
  config_.Check();
  std::size_t seed_nodes = seed_.NodeCount();
  config_.variation.max_nodes = static_cast<std::size_t>(
      std::floor(static_cast<double>(seed_nodes) * config_.max_nodes_factor));
  ValidationReport report = Validate(seed_, config_.variation.max_nodes);
  if (!report.valid) {
    throw RunError(RunError::Code::kSeedInvalid,
                   "seed program is invalid: " + report.violations.front().detail);
  }
  std::vector<std::size_t> failing;
  std::vector<TestRun> runs = RunSuite(seed_, suite_, config_.per_test_budget);
  for (std::size_t i = 0; i < runs.size(); ++i) {
    if (!runs[i].passed) failing.push_back(i);
  }
  if (!failing.empty()) {
    std::string message = "seed program fails " + std::to_string(failing.size()) + " of " +
                          std::to_string(suite_.size()) + " tests:";
    for (std::size_t i : failing) message += " #" + std::to_string(i + 1);
    throw RunError(RunError::Code::kSeedFailsTests, message, failing);
  }
  seed_fitness_ = EvaluateFitness(seed_, suite_, config_.per_test_budget);
}

LocusSampling Engine::sampling() const {
  return config_.policy.kind == PolicyKind::kUniform ? LocusSampling::kUniform
                                                     : LocusSampling::kWeighted;
}

Individual Engine::MakeSeedIndividual() {
  Individual seed;
  seed.serial = next_serial_++;
  seed.ast = seed_;
  seed.mask = config_.policy.kind == PolicyKind::kStatic
                  ? StaticMask(seed_, suite_, config_.per_test_budget)
                  : DefaultMask(seed_, config_.variation.w0, config_.policy.bounds);
  seed.fitness = seed_fitness_;
  return seed;
}

Individual Engine::Offspring(Individual& parent, const Individual* donor, Ast child,
                             const EditRecord& edit) {
  Individual individual;
  individual.serial = next_serial_++;
  individual.mask = InheritMask(parent.mask, donor != nullptr ? &donor->mask : nullptr, child,
                                edit, config_.variation.w0);
  individual.ast = std::move(child);
  individual.fitness = EvaluateFitness(individual.ast, suite_, config_.per_test_budget);
  individual.birth_generation = static_cast<std::uint32_t>(generation_);
  individual.parents = {parent.serial};
  if (donor != nullptr) individual.parents.push_back(donor->serial);
  individual.last_edit = edit;
  return individual;
}

void Engine::Log(const std::string& granularity, const std::string& op, Outcome outcome,
                 const Fitness& parent, const Individual* child) {
  LogRecord record;
  record.run_id = config_.run_id;
  record.generation = generation_;
  record.eval_index = history_.size() + 1;
  record.policy = config_.policy.kind;
  record.granularity = granularity;
  record.op = op;
  record.outcome = outcome;
  record.parent = parent;
  if (child != nullptr) {
    record.child = child->fitness;
    record.child_nodes = child->NodeCount();
  }
  record.rng_seed = config_.rng_seed;
  history_.push_back(std::move(record));
}

void Engine::NoteEvaluated(const Individual& individual) {
  std::uint64_t index = history_.size();
  if (!has_best_ || Better(*individual.fitness, *best_.fitness)) {
    best_ = individual;
    has_best_ = true;
    evals_to_best_ = index;
  }
  if (!evals_to_first_improvement_ && Better(*individual.fitness, seed_fitness_)) {
    evals_to_first_improvement_ = index;
  }
}

void Engine::SeedPopulation() {
  population_.clear();
  history_.clear();
  has_best_ = false;
  evals_to_first_improvement_.reset();
  generation_ = 0;

  Individual seed = MakeSeedIndividual();
  population_.push_back(seed);
  Log("none", "seed", Outcome::kNeutral, seed_fitness_, &seed);
  NoteEvaluated(seed);

  for (std::size_t slot = 1; slot < config_.population_size; ++slot) {
    Rng rng = Rng::ForStream(config_.rng_seed, slot);
    std::optional<Individual> variant;
    for (int attempt = 0; attempt < 20 && !variant; ++attempt) {
      Granularity granularity = SampleGranularity(
          seed.mask.at(seed.ast.root().id).granularity, config_.policy, rng);
      VariationResult result = Mutate(seed, granularity, rng, config_.variation, sampling());
      if (!result.ok()) continue;
      if (!Validate(*result.child, config_.variation.max_nodes).valid) continue;
      variant = Offspring(seed, nullptr, std::move(*result.child), result.edit);
      Outcome outcome = ClassifyOutcome(seed_fitness_, variant->fitness, true);
      Log(std::string(ToString(result.edit.granularity)), std::string(ToString(result.edit.op)),
          outcome, seed_fitness_, &*variant);
    }
    if (!variant) {
      variant = seed;
      variant->serial = next_serial_++;
      variant->parents = {seed.serial};
      Log("none", "none", Outcome::kNeutral, seed_fitness_, &*variant);
    }
    population_.push_back(std::move(*variant));
  }
}

Individual Engine::Breed(Rng& rng) {
  const VariationConfig& variation = config_.variation;
  bool crossover = rng.Bernoulli(variation.crossover_rate);
  std::size_t first = SelectParent(population_, config_.tournament_k, rng);
  std::size_t second = crossover ? SelectParent(population_, config_.tournament_k, rng) : first;

  auto copy_of = [&](std::size_t index) {
    Individual copy = population_[index];
    copy.serial = next_serial_++;
    copy.parents = {population_[index].serial};
    copy.birth_generation = static_cast<std::uint32_t>(generation_);
    copy.last_edit.reset();
    return copy;
  };

  if (!crossover && !rng.Bernoulli(variation.mutation_rate)) {
    Individual copy = copy_of(first);
    Log("none", "none", Outcome::kNeutral, *copy.fitness, &copy);
    NoteEvaluated(copy);
    return copy;
  }

  for (int attempt = 0; attempt < 20; ++attempt) {
    Individual& parent = population_[first];
    const Fitness parent_fitness = *parent.fitness;
    VariationResult result;
    if (crossover) {
      result = Crossover(parent, population_[second], rng, variation, sampling());
    } else {
      Granularity granularity = SampleGranularity(
          parent.mask.at(parent.ast.root().id).granularity, config_.policy, rng);
      result = Mutate(parent, granularity, rng, variation, sampling());
    }
    if (result.status == VariationStatus::kNoEligibleLocus) continue;

    std::string granularity_name(ToString(result.edit.granularity));
    std::string op_name(ToString(result.edit.op));
    bool valid = result.ok() && Validate(*result.child, variation.max_nodes).valid;
    if (!valid) {
      Log(granularity_name, op_name, Outcome::kInvalid, parent_fitness, nullptr);
      RecordOutcome(nullptr, parent, result.edit, Outcome::kInvalid, false, config_.policy);
      continue;
    }
    const Individual* donor = crossover ? &population_[second] : nullptr;
    Individual child = Offspring(parent, donor, std::move(*result.child), result.edit);
    Outcome outcome = ClassifyOutcome(parent_fitness, child.fitness, true);
    bool worsened = Better(parent_fitness, *child.fitness);
    RecordOutcome(&child, parent, result.edit, outcome, worsened, config_.policy);
    Log(granularity_name, op_name, outcome, parent_fitness, &child);
    NoteEvaluated(child);
    return child;
  }
  Individual copy = copy_of(first);
  Log("none", "none", Outcome::kNeutral, *copy.fitness, &copy);
  NoteEvaluated(copy);
  return copy;
}

void Engine::StepGeneration() {
  ++generation_;
  const std::size_t size = population_.size();
  std::vector<std::size_t> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return RanksBefore(population_[a], population_[b]);
  });
  std::size_t elites = std::min(config_.elitism, size);

  Population children;
  for (std::size_t slot = elites; slot < size; ++slot) {
    Rng rng = Rng::ForStream(config_.rng_seed, generation_ * size + slot);
    children.push_back(Breed(rng));
  }

  Population next;
  next.reserve(size);
  for (std::size_t i = 0; i < elites; ++i) next.push_back(population_[order[i]]);
  for (Individual& child : children) next.push_back(std::move(child));
  population_ = std::move(next);
}

RunResult Engine::Run() {
  if (population_.empty()) SeedPopulation();
  RunResult result;
  result.termination = TerminationReason::kGenerationsExhausted;
  std::size_t stale = 0;
  const auto full = static_cast<std::uint32_t>(suite_.size());
  for (std::size_t g = 0; g < config_.generations; ++g) {
    Fitness before = *best_.fitness;
    StepGeneration();
    bool improved = Better(*best_.fitness, before);
    if (config_.plateau_generations > 0 && best_.fitness->passed == full) {
      stale = improved ? 0 : stale + 1;
      if (stale >= config_.plateau_generations) {
        result.termination = TerminationReason::kPerfectionPlateau;
        break;
      }
    }
  }
  result.best = best_;
  result.seed_fitness = seed_fitness_;
  result.history = history_;
  result.evaluations = history_.size();
  result.generations_run = generation_;
  result.evals_to_first_improvement = evals_to_first_improvement_;
  result.evals_to_best = evals_to_best_;
  result.max_nodes = config_.variation.max_nodes;
  return result;
}

RunResult Run(const RunConfig& config, const Ast& seed, const TestSuite& suite) {
  return Engine(config, seed, suite).Run();
}

}  // namespace locusgp
