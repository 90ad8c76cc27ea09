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

#ifndef LOCUSGP_AST_H_
#define LOCUSGP_AST_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace locusgp {

// Identity of one node inside one Ast. Ids are unique within an Ast and are
// never reused over an individual's lifetime: nodes created by an edit draw
// fresh ids from the owning Ast's counter.
struct NodeId {
  std::uint32_t value = 0;

  friend auto operator<=>(NodeId, NodeId) = default;
};

enum class NodeKind : std::uint8_t {
  kProgram,
  kParam,
  kBlock,
  // Statements.
  kLet,
  kAssign,
  kArrayAssign,
  kIf,
  kWhile,
  kReturn,
  // Expressions.
  kIntLit,
  kVar,
  kIndex,
  kLen,
  kUnary,
  kBinary,
};

enum class ValueKind : std::uint8_t { kInt, kArray };

enum class UnaryOp : std::uint8_t { kNeg, kNot };

enum class BinaryOp : std::uint8_t {
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMod,
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kNe,
  kAnd,
  kOr,
};

inline constexpr std::size_t kNumBinaryOps = 13;

// One node of a ToyLang tree. The layout of `children` depends on `kind`:
//
//   Program      params..., body Block
//   Param        (none)                    name, param_kind
//   Block        statements...
//   Let/Assign   value                     name
//   ArrayAssign  index, value              name
//   If           cond, then Block [, else Block]
//   While        cond, body Block
//   Return       value
//   IntLit       (none)                    value
//   Var / Len    (none)                    name
//   Index        index                     name
//   Unary        operand                   unary_op
//   Binary       left, right               binary_op
struct Node {
  NodeKind kind = NodeKind::kBlock;
  NodeId id;
  std::string name;
  std::int64_t value = 0;
  ValueKind param_kind = ValueKind::kInt;
  UnaryOp unary_op = UnaryOp::kNeg;
  BinaryOp binary_op = BinaryOp::kAdd;
  std::vector<Node> children;
};

bool IsStatement(NodeKind kind);
bool IsExpression(NodeKind kind);

std::string_view ToString(NodeKind kind);
std::string_view ToString(UnaryOp op);
std::string_view ToString(BinaryOp op);

// Binding strength used by both the parser and the printer; larger binds
// tighter. All binary operators are left-associative.
int Precedence(BinaryOp op);

// Node constructors. Ids are left at 0; they are assigned when the node is
// placed into an Ast.
Node MakeIntLit(std::int64_t value);
Node MakeVar(std::string name);
Node MakeIndex(std::string name, Node index);
Node MakeLen(std::string name);
Node MakeUnary(UnaryOp op, Node operand);
Node MakeBinary(BinaryOp op, Node left, Node right);
Node MakeLet(std::string name, Node value);
Node MakeAssign(std::string name, Node value);
Node MakeArrayAssign(std::string name, Node index, Node value);
Node MakeIf(Node cond, Node then_block, std::optional<Node> else_block = {});
Node MakeWhile(Node cond, Node body);
Node MakeReturn(Node value);
Node MakeBlock(std::vector<Node> statements = {});
Node MakeParam(std::string name, ValueKind kind);
Node MakeProgram(std::string name, std::vector<Node> params, Node body);

// Calls `visit(node)` for every node of the subtree in pre-order.
void ForEachPreorder(const Node& root, const std::function<void(const Node&)>& visit);

std::size_t CountNodes(const Node& root);
std::vector<NodeId> CollectIds(const Node& root);

// Equality of shape and payload, ignoring NodeIds.
bool StructurallyEqual(const Node& a, const Node& b);

Node* FindNode(Node& root, NodeId id);
const Node* FindNode(const Node& root, NodeId id);

// A whole program together with its id counter.
class Ast {
 public:
  Ast() = default;

  // Takes ownership of `root` and numbers its nodes in pre-order from 0.
  static Ast FromRoot(Node root);

  // Takes ownership of `root` keeping its ids; `next_id` must exceed them all.
  static Ast FromRootKeepingIds(Node root, std::uint32_t next_id);

  const Node& root() const { return root_; }
  Node& mutable_root() { return root_; }

  const Node& program() const { return root_; }
  const Node& body() const { return root_.children.back(); }

  std::uint32_t next_id() const { return next_id_; }
  NodeId FreshId() { return NodeId{next_id_++}; }

  // Gives every node of `subtree` a fresh id from this Ast's counter.
  void AssignFreshIds(Node& subtree);

  std::size_t NodeCount() const { return CountNodes(root_); }

 private:
  Node root_;
  std::uint32_t next_id_ = 0;
};

// Read-only structural index over one tree: id lookup, parents, depths.
// Pointers remain valid only while the indexed tree is not modified.
class AstIndex {
 public:
  explicit AstIndex(const Node& root);

  const Node* Find(NodeId id) const;
  std::optional<NodeId> Parent(NodeId id) const;
  // Ancestors of `id`, nearest first.
  std::vector<NodeId> Ancestors(NodeId id, std::size_t max_distance) const;
  bool Contains(NodeId id) const { return entries_.count(id.value) != 0; }
  // True if `id` lies in the subtree rooted at `ancestor` (inclusive).
  bool InSubtree(NodeId id, NodeId ancestor) const;

  const std::vector<const Node*>& preorder() const { return preorder_; }

 private:
  struct Entry {
    const Node* node = nullptr;
    std::optional<NodeId> parent;
  };
  std::unordered_map<std::uint32_t, Entry> entries_;
  std::vector<const Node*> preorder_;
};

}  // namespace locusgp

template <>
struct std::hash<locusgp::NodeId> {
  std::size_t operator()(locusgp::NodeId id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};

#endif  // LOCUSGP_AST_H_
