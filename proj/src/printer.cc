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

#include "locusgp/printer.h"

namespace locusgp {

namespace {

void Indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(depth) * 2, ' '); }

void PrintExpr(const Node& node, std::string& out);

void PrintOperand(const Node& node, bool parenthesize, std::string& out) {
  if (parenthesize) out += '(';
  PrintExpr(node, out);
  if (parenthesize) out += ')';
}

void PrintExpr(const Node& node, std::string& out) {
  switch (node.kind) {
    case NodeKind::kIntLit:
      out += std::to_string(node.value);
      break;
    case NodeKind::kVar:
      out += node.name;
      break;
    case NodeKind::kIndex:
      out += node.name;
      out += '[';
      PrintExpr(node.children[0], out);
      out += ']';
      break;
    case NodeKind::kLen:
      out += "len(" + node.name + ")";
      break;
    case NodeKind::kUnary:
      out += ToString(node.unary_op);
      PrintOperand(node.children[0], node.children[0].kind == NodeKind::kBinary, out);
      break;
    case NodeKind::kBinary: {
      int precedence = Precedence(node.binary_op);
      const Node& left = node.children[0];
      const Node& right = node.children[1];
      PrintOperand(left,
                   left.kind == NodeKind::kBinary && Precedence(left.binary_op) < precedence,
                   out);
      out += ' ';
      out += ToString(node.binary_op);
      out += ' ';
      PrintOperand(right,
                   right.kind == NodeKind::kBinary && Precedence(right.binary_op) <= precedence,
                   out);
      break;
    }
    default:
      out += "<";
      out += ToString(node.kind);
      out += ">";
      break;
  }
}

void PrintStatement(const Node& node, int depth, std::string& out);

// Prints "{", the statements one per line, and the closing brace at `depth`.
void PrintBlock(const Node& block, int depth, std::string& out) {
  out += "{\n";
  for (const Node& statement : block.children) PrintStatement(statement, depth + 1, out);
  Indent(out, depth);
  out += '}';
}

void PrintStatement(const Node& node, int depth, std::string& out) {
  Indent(out, depth);
  switch (node.kind) {
    case NodeKind::kLet:
      out += "let " + node.name + " = ";
      PrintExpr(node.children[0], out);
      out += ";\n";
      break;
    case NodeKind::kAssign:
      out += node.name + " = ";
      PrintExpr(node.children[0], out);
      out += ";\n";
      break;
    case NodeKind::kArrayAssign:
      out += node.name + "[";
      PrintExpr(node.children[0], out);
      out += "] = ";
      PrintExpr(node.children[1], out);
      out += ";\n";
      break;
    case NodeKind::kIf:
      out += "if ";
      PrintExpr(node.children[0], out);
      out += ' ';
      PrintBlock(node.children[1], depth, out);
      if (node.children.size() > 2) {
        out += " else ";
        PrintBlock(node.children[2], depth, out);
      }
      out += '\n';
      break;
    case NodeKind::kWhile:
      out += "while ";
      PrintExpr(node.children[0], out);
      out += ' ';
      PrintBlock(node.children[1], depth, out);
      out += '\n';
      break;
    case NodeKind::kReturn:
      out += "return ";
      PrintExpr(node.children[0], out);
      out += ";\n";
      break;
    default:
      PrintExpr(node, out);
      out += '\n';
      break;
  }
}

void PrintProgram(const Node& program, std::string& out) {
  out += "fn " + program.name + "(";
  for (std::size_t i = 0; i + 1 < program.children.size(); ++i) {
    const Node& param = program.children[i];
    if (i > 0) out += ", ";
    out += param.name;
    out += param.param_kind == ValueKind::kArray ? ": int[]" : ": int";
  }
  out += ") ";
  PrintBlock(program.children.back(), 0, out);
  out += '\n';
}

}  // namespace

std::string Print(const Ast& ast) { return PrintNode(ast.root()); }

std::string PrintNode(const Node& node, int depth) {
  std::string out;
  if (node.kind == NodeKind::kProgram) {
    PrintProgram(node, out);
  } else if (node.kind == NodeKind::kBlock) {
    Indent(out, depth);
    PrintBlock(node, depth, out);
    out += '\n';
  } else if (node.kind == NodeKind::kParam) {
    out += node.name;
    out += node.param_kind == ValueKind::kArray ? ": int[]" : ": int";
  } else if (IsStatement(node.kind)) {
    PrintStatement(node, depth, out);
  } else {
    PrintExpr(node, out);
  }
  return out;
}

std::string Snippet(const Node& node, std::size_t max_chars) {
  std::string text = PrintNode(node);
  std::string flat;
  bool pending_space = false;
  for (char c : text) {
    if (c == '\n' || c == ' ' || c == '\t') {
      pending_space = !flat.empty();
      continue;
    }
    if (pending_space) flat += ' ';
    pending_space = false;
    flat += c;
  }
  if (flat.size() > max_chars) flat.resize(max_chars);
  return flat;
}

}  // namespace locusgp
