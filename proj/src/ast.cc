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

#include "locusgp/ast.h"

#include <cassert>
#include <utility>

namespace locusgp {

bool IsStatement(NodeKind kind) {
  switch (kind) {
    case NodeKind::kLet:
    case NodeKind::kAssign:
    case NodeKind::kArrayAssign:
    case NodeKind::kIf:
    case NodeKind::kWhile:
    case NodeKind::kReturn:
      return true;
    default:
      return false;
  }
}

bool IsExpression(NodeKind kind) {
  switch (kind) {
    case NodeKind::kIntLit:
    case NodeKind::kVar:
    case NodeKind::kIndex:
    case NodeKind::kLen:
    case NodeKind::kUnary:
    case NodeKind::kBinary:
      return true;
    default:
      return false;
  }
}

std::string_view ToString(NodeKind kind) {
  switch (kind) {
    case NodeKind::kProgram:
      return "Program";
    case NodeKind::kParam:
      return "Param";
    case NodeKind::kBlock:
      return "Block";
    case NodeKind::kLet:
      return "Let";
    case NodeKind::kAssign:
      return "Assign";
    case NodeKind::kArrayAssign:
      return "ArrayAssign";
    case NodeKind::kIf:
      return "If";
    case NodeKind::kWhile:
      return "While";
    case NodeKind::kReturn:
      return "Return";
    case NodeKind::kIntLit:
      return "IntLit";
    case NodeKind::kVar:
      return "Var";
    case NodeKind::kIndex:
      return "Index";
    case NodeKind::kLen:
      return "Len";
    case NodeKind::kUnary:
      return "Unary";
    case NodeKind::kBinary:
      return "Binary";
  }
  return "?";
}

std::string_view ToString(UnaryOp op) {
  return op == UnaryOp::kNeg ? "-" : "!";
}

std::string_view ToString(BinaryOp op) {
  switch (op) {
    case BinaryOp::kAdd:
      return "+";
    case BinaryOp::kSub:
      return "-";
    case BinaryOp::kMul:
      return "*";
    case BinaryOp::kDiv:
      return "/";
    case BinaryOp::kMod:
      return "%";
    case BinaryOp::kLt:
      return "<";
    case BinaryOp::kLe:
      return "<=";
    case BinaryOp::kGt:
      return ">";
    case BinaryOp::kGe:
      return ">=";
    case BinaryOp::kEq:
      return "==";
    case BinaryOp::kNe:
      return "!=";
    case BinaryOp::kAnd:
      return "&&";
    case BinaryOp::kOr:
      return "||";
  }
  return "?";
}

int Precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr:
      return 1;
    case BinaryOp::kAnd:
      return 2;
    case BinaryOp::kEq:
    case BinaryOp::kNe:
      return 3;
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe:
      return 4;
    case BinaryOp::kAdd:
    case BinaryOp::kSub:
      return 5;
    case BinaryOp::kMul:
    case BinaryOp::kDiv:
    case BinaryOp::kMod:
      return 6;
  }
  return 0;
}

namespace {

Node Leaf(NodeKind kind) {
  Node node;
  node.kind = kind;
  return node;
}

}  // namespace

Node MakeIntLit(std::int64_t value) {
  Node node = Leaf(NodeKind::kIntLit);
  node.value = value;
  return node;
}

Node MakeVar(std::string name) {
  Node node = Leaf(NodeKind::kVar);
  node.name = std::move(name);
  return node;
}

Node MakeIndex(std::string name, Node index) {
  Node node = Leaf(NodeKind::kIndex);
  node.name = std::move(name);
  node.children.push_back(std::move(index));
  return node;
}

Node MakeLen(std::string name) {
  Node node = Leaf(NodeKind::kLen);
  node.name = std::move(name);
  return node;
}

Node MakeUnary(UnaryOp op, Node operand) {
  Node node = Leaf(NodeKind::kUnary);
  node.unary_op = op;
  node.children.push_back(std::move(operand));
  return node;
}

Node MakeBinary(BinaryOp op, Node left, Node right) {
  Node node = Leaf(NodeKind::kBinary);
  node.binary_op = op;
  node.children.push_back(std::move(left));
  node.children.push_back(std::move(right));
  return node;
}

Node MakeLet(std::string name, Node value) {
  Node node = Leaf(NodeKind::kLet);
  node.name = std::move(name);
  node.children.push_back(std::move(value));
  return node;
}

Node MakeAssign(std::string name, Node value) {
  Node node = Leaf(NodeKind::kAssign);
  node.name = std::move(name);
  node.children.push_back(std::move(value));
  return node;
}

Node MakeArrayAssign(std::string name, Node index, Node value) {
  Node node = Leaf(NodeKind::kArrayAssign);
  node.name = std::move(name);
  node.children.push_back(std::move(index));
  node.children.push_back(std::move(value));
  return node;
}

Node MakeIf(Node cond, Node then_block, std::optional<Node> else_block) {
  Node node = Leaf(NodeKind::kIf);
  node.children.push_back(std::move(cond));
  node.children.push_back(std::move(then_block));
  if (else_block) node.children.push_back(std::move(*else_block));
  return node;
}

Node MakeWhile(Node cond, Node body) {
  Node node = Leaf(NodeKind::kWhile);
  node.children.push_back(std::move(cond));
  node.children.push_back(std::move(body));
  return node;
}

Node MakeReturn(Node value) {
  Node node = Leaf(NodeKind::kReturn);
  node.children.push_back(std::move(value));
  return node;
}

Node MakeBlock(std::vector<Node> statements) {
  Node node = Leaf(NodeKind::kBlock);
  node.children = std::move(statements);
  return node;
}

Node MakeParam(std::string name, ValueKind kind) {
  Node node = Leaf(NodeKind::kParam);
  node.name = std::move(name);
  node.param_kind = kind;
  return node;
}

Node MakeProgram(std::string name, std::vector<Node> params, Node body) {
  Node node = Leaf(NodeKind::kProgram);
  node.name = std::move(name);
  node.children = std::move(params);
  node.children.push_back(std::move(body));
  return node;
}

void ForEachPreorder(const Node& root, const std::function<void(const Node&)>& visit) {
  visit(root);
  for (const Node& child : root.children) ForEachPreorder(child, visit);
}

std::size_t CountNodes(const Node& root) {
  std::size_t count = 1;
  for (const Node& child : root.children) count += CountNodes(child);
  return count;
}

std::vector<NodeId> CollectIds(const Node& root) {
  std::vector<NodeId> ids;
  ForEachPreorder(root, [&](const Node& n) { ids.push_back(n.id); });
  return ids;
}

bool StructurallyEqual(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.children.size() != b.children.size()) return false;
  switch (a.kind) {
    case NodeKind::kIntLit:
      if (a.value != b.value) return false;
      break;
    case NodeKind::kUnary:
      if (a.unary_op != b.unary_op) return false;
      break;
    case NodeKind::kBinary:
      if (a.binary_op != b.binary_op) return false;
      break;
    case NodeKind::kParam:
      if (a.param_kind != b.param_kind || a.name != b.name) return false;
      break;
    default:
      if (a.name != b.name) return false;
      break;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!StructurallyEqual(a.children[i], b.children[i])) return false;
  }
  return true;
}

Node* FindNode(Node& root, NodeId id) {
  if (root.id == id) return &root;
  for (Node& child : root.children) {
    if (Node* found = FindNode(child, id)) return found;
  }
  return nullptr;
}

const Node* FindNode(const Node& root, NodeId id) {
  return FindNode(const_cast<Node&>(root), id);
}

namespace {

void NumberPreorder(Node& node, std::uint32_t& next) {
  node.id = NodeId{next++};
  for (Node& child : node.children) NumberPreorder(child, next);
}

}  // namespace

Ast Ast::FromRoot(Node root) {
  Ast ast;
  ast.root_ = std::move(root);
  NumberPreorder(ast.root_, ast.next_id_);
  return ast;
}

Ast Ast::FromRootKeepingIds(Node root, std::uint32_t next_id) {
  Ast ast;
  ast.root_ = std::move(root);
  ast.next_id_ = next_id;
  return ast;
}

void Ast::AssignFreshIds(Node& subtree) { NumberPreorder(subtree, next_id_); }

AstIndex::AstIndex(const Node& root) {
  struct Frame {
    const Node* node;
    std::optional<NodeId> parent;
  };
  std::vector<Frame> stack{{&root, std::nullopt}};
  while (!stack.empty()) {
    Frame frame = stack.back();
    stack.pop_back();
    entries_[frame.node->id.value] = Entry{frame.node, frame.parent};
    preorder_.push_back(frame.node);
    const auto& children = frame.node->children;
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      stack.push_back(Frame{&*it, frame.node->id});
    }
  }
}

const Node* AstIndex::Find(NodeId id) const {
  auto it = entries_.find(id.value);
  return it == entries_.end() ? nullptr : it->second.node;
}

std::optional<NodeId> AstIndex::Parent(NodeId id) const {
  auto it = entries_.find(id.value);
  return it == entries_.end() ? std::nullopt : it->second.parent;
}

std::vector<NodeId> AstIndex::Ancestors(NodeId id, std::size_t max_distance) const {
  std::vector<NodeId> result;
  std::optional<NodeId> current = Parent(id);
  while (current && result.size() < max_distance) {
    result.push_back(*current);
    current = Parent(*current);
  }
  return result;
}

bool AstIndex::InSubtree(NodeId id, NodeId ancestor) const {
  std::optional<NodeId> current = id;
  while (current) {
    if (*current == ancestor) return true;
    current = Parent(*current);
  }
  return false;
}

}  // namespace locusgp
