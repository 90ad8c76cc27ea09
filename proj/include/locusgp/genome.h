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

#ifndef LOCUSGP_GENOME_H_
#define LOCUSGP_GENOME_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "locusgp/ast.h"
#include "locusgp/fitness.h"
#include "locusgp/rng.h"

namespace locusgp {

enum class Granularity : std::uint8_t { kExpression = 0, kStatement = 1, kBlock = 2 };

inline constexpr std::array<Granularity, 3> kAllGranularities = {
    Granularity::kExpression, Granularity::kStatement, Granularity::kBlock};

std::string_view ToString(Granularity granularity);

enum class Operator : std::uint8_t {
  kExprReplace,
  kExprOpSwap,
  kExprVarSwap,
  kStmtDelete,
  kStmtInsertCopy,
  kStmtReplaceCopy,
  kStmtSwap,
  kBlockClear,
  kBlockReplaceCopy,
  kCrossover,
};

std::string_view ToString(Operator op);

// Weights indexed by Granularity: (expression, statement, block).
using GranularityVector = std::array<double, 3>;

struct WeightBounds {
  double w_min = 0.01;
  double w_max = 100.0;

  double Clamp(double w) const { return w < w_min ? w_min : (w > w_max ? w_max : w); }
  bool Contains(double w) const { return w >= w_min && w <= w_max; }
};

class MaskError : public std::runtime_error {
 public:
  enum class Code { kEmptyEligibleSet, kMaskMismatch, kUnknownLocus };

  MaskError(Code code, const std::string& message) : std::runtime_error(message), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// The per-location modification weights of one individual: a weight and a
// granularity vector for every node of its tree.
class LocusMap {
 public:
  struct Entry {
    double weight = 1.0;
    GranularityVector granularity{1.0, 1.0, 1.0};

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  bool Contains(NodeId id) const { return entries_.count(id) != 0; }
  std::size_t size() const { return entries_.size(); }

  // Throw MaskError(kUnknownLocus) for ids without an entry.
  const Entry& at(NodeId id) const;
  Entry& at(NodeId id);
  double weight(NodeId id) const { return at(id).weight; }

  void Set(NodeId id, Entry entry) { entries_[id] = entry; }
  void Erase(NodeId id) { entries_.erase(id); }

  std::vector<NodeId> Keys() const;
  const std::map<NodeId, Entry>& entries() const { return entries_; }

  // Multiplies every weight by `factor` (no clamping).
  void Scale(double factor);

  friend bool operator==(const LocusMap&, const LocusMap&) = default;

 private:
  std::map<NodeId, Entry> entries_;
};

// Where a node of a child tree was copied from.
struct Provenance {
  int parent = 0;  // 0: primary parent, 1: crossover donor
  NodeId donor;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// Describes how a child tree was derived from its parent(s).
struct EditRecord {
  Operator op = Operator::kExprReplace;
  Granularity granularity = Granularity::kExpression;
  // Loci of the edited region, as ids in the child.
  std::vector<NodeId> target_loci;
  // Ids of the primary parent that do not survive into the child.
  std::vector<NodeId> removed_loci;
  // The sampled locus (or span) as ids in the primary parent.
  std::vector<NodeId> parent_loci;
  // Child nodes that are copies of existing parent nodes.
  std::map<NodeId, Provenance> provenance;
};

// Every node mapped to `w0`, every granularity vector to (w0, w0, w0).
// Throws std::invalid_argument if `w0` lies outside `bounds`.
LocusMap DefaultMask(const Ast& ast, double w0, const WeightBounds& bounds = {});

// Draws a node from `eligible` with probability proportional to its weight,
// consuming exactly one uniform draw.
NodeId SampleLocus(const LocusMap& mask, std::span<const NodeId> eligible, Rng& rng);

// Draws a node from `eligible` uniformly, ignoring weights (one draw).
NodeId SampleUniform(std::span<const NodeId> eligible, Rng& rng);

// Builds the child's mask. Surviving nodes keep the primary parent's entry,
// copied nodes carry their donor's entry and new nodes start at `w0`.
// Throws MaskError(kMaskMismatch) if the result does not cover exactly the
// child's nodes.
LocusMap InheritMask(const LocusMap& parent, const LocusMap* donor, const Ast& child,
                     const EditRecord& edit, double w0);

// Checks the mask/tree bijection.
bool MaskMatchesTree(const LocusMap& mask, const Ast& ast);

// One line per node: id, weight, granularity weights and a source snippet.
std::string DumpMask(const LocusMap& mask, const Ast& ast);

// The unit of evolution.
struct Individual {
  std::uint64_t serial = 0;
  Ast ast;
  LocusMap mask;
  std::optional<Fitness> fitness;
  std::uint32_t birth_generation = 0;
  std::vector<std::uint64_t> parents;
  std::optional<EditRecord> last_edit;

  std::size_t NodeCount() const { return ast.NodeCount(); }
};

}  // namespace locusgp

#endif  // LOCUSGP_GENOME_H_
