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

#ifndef LOCUSGP_VARIATION_H_
#define LOCUSGP_VARIATION_H_

#include <bitset>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "locusgp/ast.h"
#include "locusgp/genome.h"
#include "locusgp/rng.h"

namespace locusgp {

struct VariationConfig {
  std::size_t max_nodes = 0;
  int max_fresh_expr_depth = 3;
  double mutation_rate = 0.9;
  double crossover_rate = 0.3;
  double w0 = 1.0;
  // Operators that mutate() may choose from, indexed by Operator.
  std::bitset<10> operators = std::bitset<10>().set();

  // Defaults with the node cap set to `factor` times the seed's size.
  static VariationConfig ForSeed(std::size_t seed_nodes, double factor = 3.0);

  bool Enabled(Operator op) const { return operators.test(static_cast<std::size_t>(op)); }
};

// How a locus is drawn from the eligible set.
enum class LocusSampling { kUniform, kWeighted };

enum class VariationStatus { kOk, kNoEligibleLocus, kOversize };

std::string_view ToString(VariationStatus status);

struct VariationResult {
  VariationStatus status = VariationStatus::kNoEligibleLocus;
  // The child tree, present iff status == kOk.
  std::optional<Ast> child;
  // Filled whenever an operator was applied (kOk and kOversize).
  EditRecord edit;

  bool ok() const { return status == VariationStatus::kOk; }
};

// An identifier visible at some program point.
struct ScopeEntry {
  std::string name;
  ValueKind kind;
};

// Operators available at each granularity.
std::span<const Operator> OperatorsFor(Granularity granularity);

// Nodes of `ast` where `op` can strike, in pre-order.
std::vector<NodeId> EligibleLoci(const Ast& ast, Operator op);

// Identifiers visible at expression or statement `id`, innermost binding
// first and one entry per name.
std::vector<ScopeEntry> ScopeAt(const Ast& ast, NodeId id);

// A fresh integer-valued expression over `scope`. Leaves are literals in
// [-8, 8] (negative ones as a negated literal), integer variables and, when
// arrays are visible, indexing with a generated index. Above depth 1 each
// level is a leaf or a Binary with a uniformly drawn operator, 50/50.
// Returned nodes carry no ids.
Node RandomExpr(std::span<const ScopeEntry> scope, int depth, Rng& rng);

// Applies one operator at one locus of the given granularity. The operator
// is drawn uniformly from the granularity's set; operators with no eligible
// locus are discarded and redrawn (at most 8 draws).
VariationResult Mutate(const Individual& parent, Granularity granularity, Rng& rng,
                       const VariationConfig& config, LocusSampling sampling);

// Applies a specific operator (used by Mutate and by tests).
VariationResult ApplyOperator(const Individual& parent, Operator op, Rng& rng,
                              const VariationConfig& config, LocusSampling sampling);

// Replaces a contiguous statement span of `a` with a copy of a contiguous
// statement span of `b`. Both anchors are drawn by locus sampling, and both
// span lengths are uniform in 1..3 (truncated at the end of the block).
VariationResult Crossover(const Individual& a, const Individual& b, Rng& rng,
                          const VariationConfig& config, LocusSampling sampling);

}  // namespace locusgp

#endif  // LOCUSGP_VARIATION_H_
