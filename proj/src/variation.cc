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

#include "locusgp/variation.h"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <utility>

namespace locusgp {

VariationConfig VariationConfig::ForSeed(std::size_t seed_nodes, double factor) {
  VariationConfig config;
  config.max_nodes = static_cast<std::size_t>(std::floor(static_cast<double>(seed_nodes) * factor));
  return config;
}

std::string_view ToString(VariationStatus status) {
  switch (status) {
    case VariationStatus::kOk:
      return "ok";
    case VariationStatus::kNoEligibleLocus:
      return "noEligibleLocus";
    case VariationStatus::kOversize:
      return "oversize";
  }
  return "?";
}

std::span<const Operator> OperatorsFor(Granularity granularity) {
  static constexpr std::array kExpression = {Operator::kExprReplace, Operator::kExprOpSwap,
                                             Operator::kExprVarSwap};
  static constexpr std::array kStatement = {Operator::kStmtDelete, Operator::kStmtInsertCopy,
                                            Operator::kStmtReplaceCopy, Operator::kStmtSwap};
  static constexpr std::array kBlock = {Operator::kBlockClear, Operator::kBlockReplaceCopy};
  switch (granularity) {
    case Granularity::kExpression:
      return kExpression;
    case Granularity::kStatement:
      return kStatement;
    case Granularity::kBlock:
      return kBlock;
  }
  return {};
}

namespace {

using ScopeStack = std::vector<std::vector<ScopeEntry>>;

std::vector<ScopeEntry> Visible(const ScopeStack& scopes) {
  std::vector<ScopeEntry> visible;
  for (auto scope = scopes.rbegin(); scope != scopes.rend(); ++scope) {
    for (auto entry = scope->rbegin(); entry != scope->rend(); ++entry) {
      bool shadowed = std::any_of(visible.begin(), visible.end(),
                                  [&](const ScopeEntry& e) { return e.name == entry->name; });
      if (!shadowed) visible.push_back(*entry);
    }
  }
  return visible;
}

ValueKind KindOf(const Node& expr, const ScopeStack& scopes) {
  if (expr.kind != NodeKind::kVar) return ValueKind::kInt;
  for (auto scope = scopes.rbegin(); scope != scopes.rend(); ++scope) {
    for (auto entry = scope->rbegin(); entry != scope->rend(); ++entry) {
      if (entry->name == expr.name) return entry->kind;
    }
  }
  return ValueKind::kInt;
}

// Walks statements and expressions in evaluation order, calling
// visit(node, scopes) with the bindings visible at that node.
template <typename Visit>
class ScopeWalker {
 public:
  explicit ScopeWalker(Visit& visit) : visit_(visit) {}

  void WalkProgram(const Node& program) {
    scopes_.emplace_back();
    for (std::size_t i = 0; i + 1 < program.children.size(); ++i) {
      const Node& param = program.children[i];
      scopes_.back().push_back(ScopeEntry{param.name, param.param_kind});
    }
    WalkBlock(program.children.back());
  }

 private:
  void WalkBlock(const Node& block) {
    scopes_.emplace_back();
    for (const Node& statement : block.children) WalkStatement(statement);
    scopes_.pop_back();
  }

  void WalkStatement(const Node& statement) {
    visit_(statement, scopes_);
    switch (statement.kind) {
      case NodeKind::kLet:
        WalkExpr(statement.children[0]);
        scopes_.back().push_back(
            ScopeEntry{statement.name, KindOf(statement.children[0], scopes_)});
        break;
      case NodeKind::kIf:
      case NodeKind::kWhile:
        WalkExpr(statement.children[0]);
        for (std::size_t i = 1; i < statement.children.size(); ++i) {
          WalkBlock(statement.children[i]);
        }
        break;
      default:
        for (const Node& child : statement.children) WalkExpr(child);
        break;
    }
  }

  void WalkExpr(const Node& expr) {
    visit_(expr, scopes_);
    for (const Node& child : expr.children) WalkExpr(child);
  }

  Visit& visit_;
  ScopeStack scopes_;
};

template <typename Visit>
void WalkScopes(const Ast& ast, Visit visit) {
  ScopeWalker<Visit>(visit).WalkProgram(ast.program());
}

struct Slot {
  Node* parent = nullptr;
  std::size_t index = 0;

  Node& node() const { return parent->children[index]; }
};

std::optional<Slot> FindSlot(Node& root, NodeId id) {
  for (std::size_t i = 0; i < root.children.size(); ++i) {
    if (root.children[i].id == id) return Slot{&root, i};
    if (auto slot = FindSlot(root.children[i], id)) return slot;
  }
  return std::nullopt;
}

void RecordProvenance(const Node& source, const Node& copy, int parent,
                      std::map<NodeId, Provenance>& provenance) {
  provenance[copy.id] = Provenance{parent, source.id};
  for (std::size_t i = 0; i < source.children.size(); ++i) {
    RecordProvenance(source.children[i], copy.children[i], parent, provenance);
  }
}

// Copies `source` into `ast`'s id space, recording where each node came from.
Node CopyInto(const Node& source, Ast& ast, int parent, std::map<NodeId, Provenance>& provenance) {
  Node copy = source;
  ast.AssignFreshIds(copy);
  RecordProvenance(source, copy, parent, provenance);
  return copy;
}

void AppendIds(const Node& node, std::vector<NodeId>& out) {
  ForEachPreorder(node, [&](const Node& n) { out.push_back(n.id); });
}

std::vector<NodeId> StatementsOf(const Ast& ast) {
  std::vector<NodeId> ids;
  ForEachPreorder(ast.root(), [&](const Node& n) {
    if (IsStatement(n.kind)) ids.push_back(n.id);
  });
  return ids;
}

std::vector<NodeId> BlocksOf(const Ast& ast) {
  std::vector<NodeId> ids;
  ForEachPreorder(ast.root(), [&](const Node& n) {
    if (n.kind == NodeKind::kBlock) ids.push_back(n.id);
  });
  return ids;
}

// Operators that exchange one operator symbol for another of the same arity
// and kind signature.
std::vector<BinaryOp> SwapPartners(BinaryOp op) {
  static const std::vector<std::vector<BinaryOp>> kClasses = {
      {BinaryOp::kAdd, BinaryOp::kSub, BinaryOp::kMul, BinaryOp::kDiv, BinaryOp::kMod},
      {BinaryOp::kLt, BinaryOp::kLe, BinaryOp::kGt, BinaryOp::kGe, BinaryOp::kEq, BinaryOp::kNe},
      {BinaryOp::kAnd, BinaryOp::kOr},
  };
  for (const auto& group : kClasses) {
    if (std::find(group.begin(), group.end(), op) == group.end()) continue;
    std::vector<BinaryOp> partners;
    for (BinaryOp other : group) {
      if (other != op) partners.push_back(other);
    }
    return partners;
  }
  return {};
}

std::vector<std::string> VarAlternatives(const std::vector<ScopeEntry>& visible,
                                         const std::string& name, ValueKind kind) {
  std::vector<std::string> names;
  for (const ScopeEntry& entry : visible) {
    if (entry.kind == kind && entry.name != name) names.push_back(entry.name);
  }
  std::sort(names.begin(), names.end());
  return names;
}

VariationResult Finish(Ast child, EditRecord edit, const VariationConfig& config) {
  VariationResult result;
  result.edit = std::move(edit);
  if (child.NodeCount() > config.max_nodes) {
    result.status = VariationStatus::kOversize;
    return result;
  }
  result.status = VariationStatus::kOk;
  result.child = std::move(child);
  return result;
}

NodeId Draw(const LocusMap& mask, const std::vector<NodeId>& eligible, Rng& rng,
            LocusSampling sampling) {
  return sampling == LocusSampling::kWeighted ? SampleLocus(mask, eligible, rng)
                                              : SampleUniform(eligible, rng);
}

class Mutator {
 public:
  Mutator(const Individual& parent, Rng& rng, const VariationConfig& config)
      : parent_(parent), rng_(rng), config_(config) {}

  VariationResult Apply(Operator op, NodeId locus) {
    EditRecord edit;
    edit.op = op;
    edit.parent_loci = {locus};
    Ast child = parent_.ast;
    switch (op) {
      case Operator::kExprReplace:
        edit.granularity = Granularity::kExpression;
        return ExprReplace(std::move(child), std::move(edit), locus);
      case Operator::kExprOpSwap:
        edit.granularity = Granularity::kExpression;
        return ExprOpSwap(std::move(child), std::move(edit), locus);
      case Operator::kExprVarSwap:
        edit.granularity = Granularity::kExpression;
        return ExprVarSwap(std::move(child), std::move(edit), locus);
      case Operator::kStmtDelete:
        edit.granularity = Granularity::kStatement;
        return StmtDelete(std::move(child), std::move(edit), locus);
      case Operator::kStmtInsertCopy:
        edit.granularity = Granularity::kStatement;
        return StmtInsertCopy(std::move(child), std::move(edit), locus);
      case Operator::kStmtReplaceCopy:
        edit.granularity = Granularity::kStatement;
        return StmtReplaceCopy(std::move(child), std::move(edit), locus);
      case Operator::kStmtSwap:
        edit.granularity = Granularity::kStatement;
        return StmtSwap(std::move(child), std::move(edit), locus);
      case Operator::kBlockClear:
        edit.granularity = Granularity::kBlock;
        return BlockClear(std::move(child), std::move(edit), locus);
      case Operator::kBlockReplaceCopy:
        edit.granularity = Granularity::kBlock;
        return BlockReplaceCopy(std::move(child), std::move(edit), locus);
      case Operator::kCrossover:
        break;
    }
    return VariationResult{};
  }

 private:
  VariationResult ExprReplace(Ast child, EditRecord edit, NodeId locus) {
    std::vector<ScopeEntry> scope = ScopeAt(parent_.ast, locus);
    Node fresh = RandomExpr(scope, config_.max_fresh_expr_depth, rng_);
    child.AssignFreshIds(fresh);
    Slot slot = *FindSlot(child.mutable_root(), locus);
    AppendIds(slot.node(), edit.removed_loci);
    edit.target_loci = {fresh.id};
    slot.node() = std::move(fresh);
    return Finish(std::move(child), std::move(edit), config_);
  }

  VariationResult ExprOpSwap(Ast child, EditRecord edit, NodeId locus) {
    Node& node = *FindNode(child.mutable_root(), locus);
    if (node.kind == NodeKind::kUnary) {
      node.unary_op = node.unary_op == UnaryOp::kNeg ? UnaryOp::kNot : UnaryOp::kNeg;
    } else {
      std::vector<BinaryOp> partners = SwapPartners(node.binary_op);
      node.binary_op = partners[rng_.Below(partners.size())];
    }
    edit.target_loci = {locus};
    return Finish(std::move(child), std::move(edit), config_);
  }

  VariationResult ExprVarSwap(Ast child, EditRecord edit, NodeId locus) {
    std::vector<ScopeEntry> scope = ScopeAt(parent_.ast, locus);
    Node& node = *FindNode(child.mutable_root(), locus);
    ValueKind kind = ValueKind::kInt;
    for (const ScopeEntry& entry : scope) {
      if (entry.name == node.name) kind = entry.kind;
    }
    std::vector<std::string> names = VarAlternatives(scope, node.name, kind);
    node.name = names[rng_.Below(names.size())];
    edit.target_loci = {locus};
    return Finish(std::move(child), std::move(edit), config_);
  }

  VariationResult StmtDelete(Ast child, EditRecord edit, NodeId locus) {
    Slot slot = *FindSlot(child.mutable_root(), locus);
    AppendIds(slot.node(), edit.removed_loci);
    edit.target_loci = {slot.parent->id};
    slot.parent->children.erase(slot.parent->children.begin() +
                                static_cast<std::ptrdiff_t>(slot.index));
    return Finish(std::move(child), std::move(edit), config_);
  }

  VariationResult StmtInsertCopy(Ast child, EditRecord edit, NodeId locus) {
    std::vector<NodeId> statements = StatementsOf(parent_.ast);
    NodeId source_id = statements[rng_.Below(statements.size())];
    bool after = rng_.Below(2) == 1;
    Node copy = CopyInto(*FindNode(parent_.ast.root(), source_id), child, 0, edit.provenance);
    edit.target_loci = {copy.id};
    Slot slot = *FindSlot(child.mutable_root(), locus);
    auto& siblings = slot.parent->children;
    siblings.insert(siblings.begin() + static_cast<std::ptrdiff_t>(slot.index + (after ? 1 : 0)),
                    std::move(copy));
    return Finish(std::move(child), std::move(edit), config_);
  }

  VariationResult StmtReplaceCopy(Ast child, EditRecord edit, NodeId locus) {
    std::vector<NodeId> others;
    for (NodeId id : StatementsOf(parent_.ast)) {
      if (id != locus) others.push_back(id);
    }
    NodeId source_id = others[rng_.Below(others.size())];
    Node copy = CopyInto(*FindNode(parent_.ast.root(), source_id), child, 0, edit.provenance);
    edit.target_loci = {copy.id};
    Slot slot = *FindSlot(child.mutable_root(), locus);
    AppendIds(slot.node(), edit.removed_loci);
    slot.node() = std::move(copy);
    return Finish(std::move(child), std::move(edit), config_);
  }

  VariationResult StmtSwap(Ast child, EditRecord edit, NodeId locus) {
    Slot slot = *FindSlot(child.mutable_root(), locus);
    auto& siblings = slot.parent->children;
    std::size_t other = rng_.Below(siblings.size() - 1);
    if (other >= slot.index) ++other;
    NodeId other_id = siblings[other].id;
    std::swap(siblings[slot.index], siblings[other]);
    edit.target_loci = {locus, other_id};
    edit.parent_loci = {locus, other_id};
    return Finish(std::move(child), std::move(edit), config_);
  }

  VariationResult BlockClear(Ast child, EditRecord edit, NodeId locus) {
    Node& block = *FindNode(child.mutable_root(), locus);
    for (const Node& statement : block.children) AppendIds(statement, edit.removed_loci);
    block.children.clear();
    edit.target_loci = {locus};
    return Finish(std::move(child), std::move(edit), config_);
  }

  VariationResult BlockReplaceCopy(Ast child, EditRecord edit, NodeId locus) {
    std::vector<NodeId> others;
    for (NodeId id : BlocksOf(parent_.ast)) {
      if (id != locus) others.push_back(id);
    }
    const Node& source = *FindNode(parent_.ast.root(), others[rng_.Below(others.size())]);
    std::vector<Node> copies;
    for (const Node& statement : source.children) {
      copies.push_back(CopyInto(statement, child, 0, edit.provenance));
    }
    Node& block = *FindNode(child.mutable_root(), locus);
    for (const Node& statement : block.children) AppendIds(statement, edit.removed_loci);
    block.children = std::move(copies);
    edit.target_loci = {locus};
    return Finish(std::move(child), std::move(edit), config_);
  }

  const Individual& parent_;
  Rng& rng_;
  const VariationConfig& config_;
};

// A statement span [first, first + length) inside one block.
struct Span {
  NodeId block;
  std::size_t first = 0;
  std::size_t length = 0;
};

Span DrawSpan(const Individual& individual, const std::vector<NodeId>& statements, Rng& rng,
              LocusSampling sampling) {
  NodeId anchor = Draw(individual.mask, statements, rng, sampling);
  std::size_t length = 1 + rng.Below(3);
  AstIndex index(individual.ast.root());
  NodeId block_id = *index.Parent(anchor);
  const Node& block = *index.Find(block_id);
  std::size_t first = 0;
  while (block.children[first].id != anchor) ++first;
  length = std::min(length, block.children.size() - first);
  return Span{block_id, first, length};
}

}  // namespace

std::vector<ScopeEntry> ScopeAt(const Ast& ast, NodeId id) {
  std::vector<ScopeEntry> result;
  bool found = false;
  WalkScopes(ast, [&](const Node& node, const ScopeStack& scopes) {
    if (!found && node.id == id) {
      result = Visible(scopes);
      found = true;
    }
  });
  return result;
}

std::vector<NodeId> EligibleLoci(const Ast& ast, Operator op) {
  std::vector<NodeId> eligible;
  switch (op) {
    case Operator::kExprReplace:
      WalkScopes(ast, [&](const Node& node, const ScopeStack& scopes) {
        if (IsExpression(node.kind) && KindOf(node, scopes) == ValueKind::kInt) {
          eligible.push_back(node.id);
        }
      });
      break;
    case Operator::kExprOpSwap:
      ForEachPreorder(ast.root(), [&](const Node& node) {
        if (node.kind == NodeKind::kUnary) eligible.push_back(node.id);
        if (node.kind == NodeKind::kBinary && !SwapPartners(node.binary_op).empty()) {
          eligible.push_back(node.id);
        }
      });
      break;
    case Operator::kExprVarSwap:
      WalkScopes(ast, [&](const Node& node, const ScopeStack& scopes) {
        if (node.kind != NodeKind::kVar) return;
        if (!VarAlternatives(Visible(scopes), node.name, KindOf(node, scopes)).empty()) {
          eligible.push_back(node.id);
        }
      });
      break;
    case Operator::kStmtDelete: {
      const Node& body = ast.body();
      ForEachPreorder(ast.root(), [&](const Node& node) {
        if (!IsStatement(node.kind)) return;
        bool top_level_return =
            node.kind == NodeKind::kReturn &&
            std::any_of(body.children.begin(), body.children.end(),
                        [&](const Node& s) { return s.id == node.id; });
        if (!top_level_return) eligible.push_back(node.id);
      });
      break;
    }
    case Operator::kStmtInsertCopy:
      eligible = StatementsOf(ast);
      break;
    case Operator::kStmtReplaceCopy:
      eligible = StatementsOf(ast);
      if (eligible.size() < 2) eligible.clear();
      break;
    case Operator::kStmtSwap:
      ForEachPreorder(ast.root(), [&](const Node& node) {
        if (node.kind != NodeKind::kBlock || node.children.size() < 2) return;
        for (const Node& statement : node.children) eligible.push_back(statement.id);
      });
      std::sort(eligible.begin(), eligible.end());
      break;
    case Operator::kBlockClear:
      ForEachPreorder(ast.root(), [&](const Node& node) {
        if (node.kind == NodeKind::kBlock && !node.children.empty()) eligible.push_back(node.id);
      });
      break;
    case Operator::kBlockReplaceCopy:
      eligible = BlocksOf(ast);
      if (eligible.size() < 2) eligible.clear();
      break;
    case Operator::kCrossover:
      eligible = StatementsOf(ast);
      break;
  }
  return eligible;
}

Node RandomExpr(std::span<const ScopeEntry> scope, int depth, Rng& rng) {
  if (depth > 1 && rng.Below(2) == 1) {
    auto op = static_cast<BinaryOp>(rng.Below(kNumBinaryOps));
    Node left = RandomExpr(scope, depth - 1, rng);
    Node right = RandomExpr(scope, depth - 1, rng);
    return MakeBinary(op, std::move(left), std::move(right));
  }
  std::vector<const ScopeEntry*> ints;
  std::vector<const ScopeEntry*> arrays;
  for (const ScopeEntry& entry : scope) {
    (entry.kind == ValueKind::kInt ? ints : arrays).push_back(&entry);
  }
  enum class Leaf { kLiteral, kVar, kIndex };
  std::vector<Leaf> choices = {Leaf::kLiteral};
  if (!ints.empty()) choices.push_back(Leaf::kVar);
  if (!arrays.empty()) choices.push_back(Leaf::kIndex);
  switch (choices[rng.Below(choices.size())]) {
    case Leaf::kLiteral: {
      std::int64_t value = rng.Range(-8, 8);
      if (value < 0) return MakeUnary(UnaryOp::kNeg, MakeIntLit(-value));
      return MakeIntLit(value);
    }
    case Leaf::kVar:
      return MakeVar(ints[rng.Below(ints.size())]->name);
    case Leaf::kIndex: {
      const std::string& name = arrays[rng.Below(arrays.size())]->name;
      return MakeIndex(name, RandomExpr(scope, 1, rng));
    }
  }
  return MakeIntLit(0);
}

VariationResult ApplyOperator(const Individual& parent, Operator op, Rng& rng,
                              const VariationConfig& config, LocusSampling sampling) {
  std::vector<NodeId> eligible = EligibleLoci(parent.ast, op);
  if (eligible.empty() || op == Operator::kCrossover) return VariationResult{};
  NodeId locus = Draw(parent.mask, eligible, rng, sampling);
  return Mutator(parent, rng, config).Apply(op, locus);
}

VariationResult Mutate(const Individual& parent, Granularity granularity, Rng& rng,
                       const VariationConfig& config, LocusSampling sampling) {
  std::vector<Operator> untried;
  for (Operator op : OperatorsFor(granularity)) {
    if (config.Enabled(op)) untried.push_back(op);
  }
  for (int attempt = 0; attempt < 8 && !untried.empty(); ++attempt) {
    std::size_t pick = rng.Below(untried.size());
    Operator op = untried[pick];
    std::vector<NodeId> eligible = EligibleLoci(parent.ast, op);
    if (eligible.empty()) {
      untried.erase(untried.begin() + static_cast<std::ptrdiff_t>(pick));
      continue;
    }
    NodeId locus = Draw(parent.mask, eligible, rng, sampling);
    return Mutator(parent, rng, config).Apply(op, locus);
  }
  return VariationResult{};
}

VariationResult Crossover(const Individual& a, const Individual& b, Rng& rng,
                          const VariationConfig& config, LocusSampling sampling) {
  std::vector<NodeId> statements_a = StatementsOf(a.ast);
  std::vector<NodeId> statements_b = StatementsOf(b.ast);
  if (statements_a.empty() || statements_b.empty()) return VariationResult{};

  Span span_a = DrawSpan(a, statements_a, rng, sampling);
  Span span_b = DrawSpan(b, statements_b, rng, sampling);

  EditRecord edit;
  edit.op = Operator::kCrossover;
  edit.granularity = Granularity::kStatement;

  Ast child = a.ast;
  const Node& donor_block = *FindNode(b.ast.root(), span_b.block);
  std::vector<Node> copies;
  for (std::size_t i = 0; i < span_b.length; ++i) {
    copies.push_back(CopyInto(donor_block.children[span_b.first + i], child, 1, edit.provenance));
    edit.target_loci.push_back(copies.back().id);
  }
  Node& block = *FindNode(child.mutable_root(), span_a.block);
  auto begin = block.children.begin() + static_cast<std::ptrdiff_t>(span_a.first);
  auto end = begin + static_cast<std::ptrdiff_t>(span_a.length);
  for (auto it = begin; it != end; ++it) {
    edit.parent_loci.push_back(it->id);
    AppendIds(*it, edit.removed_loci);
  }
  block.children.erase(begin, end);
  block.children.insert(block.children.begin() + static_cast<std::ptrdiff_t>(span_a.first),
                        std::make_move_iterator(copies.begin()),
                        std::make_move_iterator(copies.end()));
  return Finish(std::move(child), std::move(edit), config);
}

}  // namespace locusgp
