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

#ifndef LOCUSGP_ADAPTATION_H_
#define LOCUSGP_ADAPTATION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "locusgp/ast.h"
#include "locusgp/fitness.h"
#include "locusgp/genome.h"
#include "locusgp/rng.h"

namespace locusgp {

// Result of comparing an offspring with its parent.
enum class Outcome { kChanged, kNeutral, kInvalid };

std::string_view ToString(Outcome outcome);

enum class PolicyKind { kUniform, kStatic, kDynamic };

std::string_view ToString(PolicyKind kind);
std::optional<PolicyKind> ParsePolicyKind(std::string_view text);

enum class Writeback { kChildOnly, kParentAndChild };

struct PolicyConfig {
  PolicyKind kind = PolicyKind::kDynamic;
  double alpha_up = 1.5;
  double alpha_neutral = 0.95;
  double alpha_invalid = 0.5;
  double gamma = 0.5;
  std::size_t neighborhood_depth = 2;
  WeightBounds bounds;
  Writeback writeback = Writeback::kParentAndChild;
  bool granularity_inference = false;
  // Run-level granularity distribution used when inference is off.
  GranularityVector granularity_dist{0.5, 0.4, 0.1};
  // When false, a child that is worse than its parent is treated as neutral
  // evidence instead of as influential.
  bool worsen_increases = true;

  // Throws std::invalid_argument when an invariant does not hold.
  void Check() const;
};

// Changed iff valid and the fitness pair differs (in either direction);
// Neutral iff valid and equal; Invalid iff the child failed validation.
// Throws std::invalid_argument unless `child` is present exactly when
// `child_valid`.
Outcome ClassifyOutcome(const Fitness& parent, const std::optional<Fitness>& child,
                        bool child_valid);

// Multiplier for `outcome`: alpha_up, alpha_neutral or alpha_invalid.
double UpdateFactor(Outcome outcome, bool worsened, const PolicyConfig& config);

// The factor applied at tree distance `distance` from a target:
// 1 + (alpha - 1) * gamma^distance.
double DecayedFactor(double alpha, std::size_t distance, double gamma);

// Multiplies the weight of every target by `alpha` and the weight of each
// ancestor within neighborhood_depth by the decayed factor, clamping to the
// weight bounds. A node reached from several targets is updated once, at
// its smallest distance. Throws MaskError(kUnknownLocus) for targets that
// are missing from `mask` or `tree`.
LocusMap UpdateMask(const LocusMap& mask, const Ast& tree, std::span<const NodeId> targets,
                    double alpha, const PolicyConfig& config);

// The same rule applied to one component of the granularity vectors. The
// Program root's vector, which anchors granularity sampling, also receives
// the undecayed factor.
LocusMap UpdateGranularity(const LocusMap& mask, const Ast& tree,
                           std::span<const NodeId> targets, Granularity used, double alpha,
                           const PolicyConfig& config);

// Single-vector form of the granularity rule.
GranularityVector UpdateGranularityVector(const GranularityVector& vector, Granularity used,
                                          double factor, const WeightBounds& bounds);

// Feeds one offspring's outcome back into the masks (dynamic policy only;
// other policies leave masks untouched). The child's mask is updated at
// edit.target_loci unless the outcome is Invalid; the parent's mask is
// updated at edit.parent_loci when writeback is kParentAndChild or the
// outcome is Invalid.
void RecordOutcome(Individual* child, Individual& parent, const EditRecord& edit,
                   Outcome outcome, bool worsened, const PolicyConfig& config);

// Trace-derived baseline mask: every node's weight is 0.1 + hits / maxHits,
// where hits sums the node's visit counts over the whole suite (0.1 for all
// nodes when nothing executed).
LocusMap StaticMask(const Ast& seed, const TestSuite& suite, std::uint64_t per_test_budget);

// With inference off, draws from the run-level distribution; otherwise
// proportionally to `vector`. One uniform draw either way.
Granularity SampleGranularity(const GranularityVector& vector, const PolicyConfig& config,
                              Rng& rng);

}  // namespace locusgp

#endif  // LOCUSGP_ADAPTATION_H_
