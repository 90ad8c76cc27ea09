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

#include "locusgp/adaptation.h"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace locusgp {

std::string_view ToString(Outcome outcome) {
  switch (outcome) {
    case Outcome::kChanged:
      return "Changed";
    case Outcome::kNeutral:
      return "Neutral";
    case Outcome::kInvalid:
      return "Invalid";
  }
  return "?";
}

std::string_view ToString(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kUniform:
      return "uniform";
    case PolicyKind::kStatic:
      return "static";
    case PolicyKind::kDynamic:
      return "dynamic";
  }
  return "?";
}

std::optional<PolicyKind> ParsePolicyKind(std::string_view text) {
  if (text == "uniform") return PolicyKind::kUniform;
  if (text == "static") return PolicyKind::kStatic;
  if (text == "dynamic") return PolicyKind::kDynamic;
  return std::nullopt;
}

void PolicyConfig::Check() const {
  auto fail = [](const std::string& what) { throw std::invalid_argument(what); };
  if (alpha_up < 1.0) fail("alpha_up must be >= 1");
  if (alpha_neutral > 1.0) fail("alpha_neutral must be <= 1");
  if (alpha_invalid > alpha_neutral) fail("alpha_invalid must be <= alpha_neutral");
  if (alpha_invalid <= 0.0) fail("alpha_invalid must be positive");
  if (gamma < 0.0 || gamma > 1.0) fail("gamma must lie in [0, 1]");
  if (!(bounds.w_min > 0.0 && bounds.w_min < 1.0 && 1.0 < bounds.w_max)) {
    fail("weight bounds must satisfy 0 < w_min < 1 < w_max");
  }
  double total = 0.0;
  for (double p : granularity_dist) {
    if (p < 0.0) fail("granularity_dist entries must be non-negative");
    total += p;
  }
  if (total <= 0.0) fail("granularity_dist must have a positive entry");
}

Outcome ClassifyOutcome(const Fitness& parent, const std::optional<Fitness>& child,
                        bool child_valid) {
  if (child.has_value() != child_valid) {
    throw std::invalid_argument("child fitness must be present exactly when the child is valid");
  }
  if (!child_valid) return Outcome::kInvalid;
  return *child == parent ? Outcome::kNeutral : Outcome::kChanged;
}

double UpdateFactor(Outcome outcome, bool worsened, const PolicyConfig& config) {
  switch (outcome) {
    case Outcome::kChanged:
      return worsened && !config.worsen_increases ? config.alpha_neutral : config.alpha_up;
    case Outcome::kNeutral:
      return config.alpha_neutral;
    case Outcome::kInvalid:
      return config.alpha_invalid;
  }
  return 1.0;
}

double DecayedFactor(double alpha, std::size_t distance, double gamma) {
  return 1.0 + (alpha - 1.0) * std::pow(gamma, static_cast<double>(distance));
}

namespace {

// Each affected node with its smallest distance to a target.
std::map<NodeId, std::size_t> Neighborhood(const Ast& tree, std::span<const NodeId> targets,
                                           std::size_t depth) {
  AstIndex index(tree.root());
  std::map<NodeId, std::size_t> distances;
  auto note = [&](NodeId id, std::size_t d) {
    auto [it, inserted] = distances.emplace(id, d);
    if (!inserted && d < it->second) it->second = d;
  };
  for (NodeId target : targets) {
    if (!index.Contains(target)) {
      throw MaskError(MaskError::Code::kUnknownLocus,
                      "target " + std::to_string(target.value) + " is not in the tree");
    }
    note(target, 0);
    std::vector<NodeId> ancestors = index.Ancestors(target, depth);
    for (std::size_t i = 0; i < ancestors.size(); ++i) note(ancestors[i], i + 1);
  }
  return distances;
}

}  // namespace

LocusMap UpdateMask(const LocusMap& mask, const Ast& tree, std::span<const NodeId> targets,
                    double alpha, const PolicyConfig& config) {
  LocusMap updated = mask;
  for (const auto& [id, distance] : Neighborhood(tree, targets, config.neighborhood_depth)) {
    LocusMap::Entry& entry = updated.at(id);
    entry.weight =
        config.bounds.Clamp(entry.weight * DecayedFactor(alpha, distance, config.gamma));
  }
  return updated;
}

GranularityVector UpdateGranularityVector(const GranularityVector& vector, Granularity used,
                                          double factor, const WeightBounds& bounds) {
  GranularityVector updated = vector;
  auto slot = static_cast<std::size_t>(used);
  updated[slot] = bounds.Clamp(updated[slot] * factor);
  return updated;
}

LocusMap UpdateGranularity(const LocusMap& mask, const Ast& tree,
                           std::span<const NodeId> targets, Granularity used, double alpha,
                           const PolicyConfig& config) {
  LocusMap updated = mask;
  std::map<NodeId, std::size_t> distances =
      Neighborhood(tree, targets, config.neighborhood_depth);
  NodeId root = tree.root().id;
  distances[root] = 0;
  for (const auto& [id, distance] : distances) {
    LocusMap::Entry& entry = updated.at(id);
    entry.granularity = UpdateGranularityVector(
        entry.granularity, used, DecayedFactor(alpha, distance, config.gamma), config.bounds);
  }
  return updated;
}

void RecordOutcome(Individual* child, Individual& parent, const EditRecord& edit,
                   Outcome outcome, bool worsened, const PolicyConfig& config) {
  if (config.kind != PolicyKind::kDynamic) return;
  double alpha = UpdateFactor(outcome, worsened, config);
  auto apply = [&](Individual& individual, std::span<const NodeId> loci) {
    if (loci.empty()) return;
    individual.mask = UpdateMask(individual.mask, individual.ast, loci, alpha, config);
    if (config.granularity_inference) {
      individual.mask = UpdateGranularity(individual.mask, individual.ast, loci,
                                          edit.granularity, alpha, config);
    }
  };
  if (outcome != Outcome::kInvalid && child != nullptr) apply(*child, edit.target_loci);
  if (outcome == Outcome::kInvalid || config.writeback == Writeback::kParentAndChild) {
    apply(parent, edit.parent_loci);
  }
}

LocusMap StaticMask(const Ast& seed, const TestSuite& suite, std::uint64_t per_test_budget) {
  Trace hits;
  for (const TestRun& run : RunSuite(seed, suite, per_test_budget)) hits.Merge(run.result.trace);
  std::uint64_t max_hits = 0;
  for (const auto& [id, count] : hits.Entries()) max_hits = std::max(max_hits, count);
  LocusMap mask;
  ForEachPreorder(seed.root(), [&](const Node& node) {
    double weight = 0.1;
    if (max_hits > 0) {
      weight += static_cast<double>(hits.count(node.id)) / static_cast<double>(max_hits);
    }
    mask.Set(node.id, LocusMap::Entry{weight, {1.0, 1.0, 1.0}});
  });
  return mask;
}

Granularity SampleGranularity(const GranularityVector& vector, const PolicyConfig& config,
                              Rng& rng) {
  const GranularityVector& weights = config.granularity_inference ? vector : config.granularity_dist;
  double total = weights[0] + weights[1] + weights[2];
  double target = rng.Uniform() * total;
  double cumulative = 0.0;
  Granularity last = Granularity::kExpression;
  for (Granularity g : kAllGranularities) {
    double w = weights[static_cast<std::size_t>(g)];
    if (w <= 0.0) continue;
    cumulative += w;
    last = g;
    if (target < cumulative) return g;
  }
  return last;
}

}  // namespace locusgp
