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

#include "locusgp/genome.h"

#include <cstdio>
#include <utility>

#include "locusgp/printer.h"

namespace locusgp {

std::string_view ToString(Granularity granularity) {
  switch (granularity) {
    case Granularity::kExpression:
      return "expression";
    case Granularity::kStatement:
      return "statement";
    case Granularity::kBlock:
      return "block";
  }
  return "?";
}

std::string_view ToString(Operator op) {
  switch (op) {
    case Operator::kExprReplace:
      return "exprReplace";
    case Operator::kExprOpSwap:
      return "exprOpSwap";
    case Operator::kExprVarSwap:
      return "exprVarSwap";
    case Operator::kStmtDelete:
      return "stmtDelete";
    case Operator::kStmtInsertCopy:
      return "stmtInsertCopy";
    case Operator::kStmtReplaceCopy:
      return "stmtReplaceCopy";
    case Operator::kStmtSwap:
      return "stmtSwap";
    case Operator::kBlockClear:
      return "blockClear";
    case Operator::kBlockReplaceCopy:
      return "blockReplaceCopy";
    case Operator::kCrossover:
      return "crossover";
  }
  return "?";
}

const LocusMap::Entry& LocusMap::at(NodeId id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    throw MaskError(MaskError::Code::kUnknownLocus,
                    "node " + std::to_string(id.value) + " has no mask entry");
  }
  return it->second;
}

LocusMap::Entry& LocusMap::at(NodeId id) {
  return const_cast<Entry&>(std::as_const(*this).at(id));
}

std::vector<NodeId> LocusMap::Keys() const {
  std::vector<NodeId> keys;
  keys.reserve(entries_.size());
  for (const auto& [id, entry] : entries_) keys.push_back(id);
  return keys;
}

void LocusMap::Scale(double factor) {
  for (auto& [id, entry] : entries_) entry.weight *= factor;
}

LocusMap DefaultMask(const Ast& ast, double w0, const WeightBounds& bounds) {
  if (!bounds.Contains(w0)) {
    throw std::invalid_argument("initial weight " + std::to_string(w0) +
                                " lies outside [w_min, w_max]");
  }
  LocusMap mask;
  ForEachPreorder(ast.root(), [&](const Node& node) {
    mask.Set(node.id, LocusMap::Entry{w0, {w0, w0, w0}});
  });
  return mask;
}

NodeId SampleLocus(const LocusMap& mask, std::span<const NodeId> eligible, Rng& rng) {
  if (eligible.empty()) {
    throw MaskError(MaskError::Code::kEmptyEligibleSet, "no eligible locus to sample");
  }
  double total = 0.0;
  for (NodeId id : eligible) total += mask.weight(id);
  double target = rng.Uniform() * total;
  double cumulative = 0.0;
  for (NodeId id : eligible) {
    cumulative += mask.weight(id);
    if (target < cumulative) return id;
  }
  return eligible.back();
}

NodeId SampleUniform(std::span<const NodeId> eligible, Rng& rng) {
  if (eligible.empty()) {
    throw MaskError(MaskError::Code::kEmptyEligibleSet, "no eligible locus to sample");
  }
  return eligible[rng.Below(eligible.size())];
}

LocusMap InheritMask(const LocusMap& parent, const LocusMap* donor, const Ast& child,
                     const EditRecord& edit, double w0) {
  LocusMap mask;
  ForEachPreorder(child.root(), [&](const Node& node) {
    auto copied = edit.provenance.find(node.id);
    if (copied != edit.provenance.end()) {
      const LocusMap* source = copied->second.parent == 0 ? &parent : donor;
      if (source == nullptr || !source->Contains(copied->second.donor)) {
        throw MaskError(MaskError::Code::kMaskMismatch,
                        "donor node " + std::to_string(copied->second.donor.value) +
                            " has no mask entry");
      }
      mask.Set(node.id, source->at(copied->second.donor));
    } else if (parent.Contains(node.id)) {
      mask.Set(node.id, parent.at(node.id));
    } else {
      mask.Set(node.id, LocusMap::Entry{w0, {w0, w0, w0}});
    }
  });
  if (mask.size() != child.NodeCount()) {
    throw MaskError(MaskError::Code::kMaskMismatch, "child tree has duplicate node ids");
  }
  return mask;
}

bool MaskMatchesTree(const LocusMap& mask, const Ast& ast) {
  std::vector<NodeId> ids = CollectIds(ast.root());
  if (ids.size() != mask.size()) return false;
  for (NodeId id : ids) {
    if (!mask.Contains(id)) return false;
  }
  return true;
}

std::string DumpMask(const LocusMap& mask, const Ast& ast) {
  AstIndex index(ast.root());
  std::string out;
  char buffer[128];
  for (const auto& [id, entry] : mask.entries()) {
    const Node* node = index.Find(id);
    std::snprintf(buffer, sizeof buffer, "%u\t%.6g\t%.6g,%.6g,%.6g\t", id.value, entry.weight,
                  entry.granularity[0], entry.granularity[1], entry.granularity[2]);
    out += buffer;
    out += node != nullptr ? Snippet(*node) : std::string("?");
    out += '\n';
  }
  return out;
}

}  // namespace locusgp
