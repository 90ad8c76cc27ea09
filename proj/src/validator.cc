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

#include "locusgp/validator.h"

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <utility>

namespace locusgp {

std::string_view ToString(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::kKindMismatch:
      return "kindMismatch";
    case ViolationReason::kUnboundIdentifier:
      return "unboundIdentifier";
    case ViolationReason::kSizeExceeded:
      return "sizeExceeded";
    case ViolationReason::kArityError:
      return "arityError";
  }
  return "?";
}

bool ValidationReport::Has(ViolationReason reason) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.reason == reason; });
}

namespace {

class Checker {
 public:
  explicit Checker(ValidationReport& report) : report_(report) {}

  void CheckProgram(const Node& program) {
    CheckUniqueIds(program);
    if (program.kind != NodeKind::kProgram || program.children.empty() ||
        program.children.back().kind != NodeKind::kBlock) {
      Report(program, ViolationReason::kArityError, "root must be a program with a body block");
      return;
    }
    scopes_.emplace_back();
    for (std::size_t i = 0; i + 1 < program.children.size(); ++i) {
      const Node& param = program.children[i];
      if (param.kind != NodeKind::kParam || !param.children.empty()) {
        Report(param, ViolationReason::kArityError, "malformed parameter");
        continue;
      }
      Bind(param.name, param.param_kind);
    }
    CheckBlock(program.children.back());
    scopes_.pop_back();
  }

 private:
  void Report(const Node& node, ViolationReason reason, std::string detail) {
    report_.violations.push_back(Violation{node.id, reason, std::move(detail)});
  }

  void CheckUniqueIds(const Node& root) {
    std::unordered_set<std::uint32_t> seen;
    ForEachPreorder(root, [&](const Node& n) {
      if (!seen.insert(n.id.value).second) {
        Report(n, ViolationReason::kArityError, "duplicate node id");
      }
    });
  }

  void Bind(const std::string& name, ValueKind kind) { scopes_.back().emplace_back(name, kind); }

  std::optional<ValueKind> Lookup(const std::string& name) const {
    for (auto scope = scopes_.rbegin(); scope != scopes_.rend(); ++scope) {
      for (auto binding = scope->rbegin(); binding != scope->rend(); ++binding) {
        if (binding->first == name) return binding->second;
      }
    }
    return std::nullopt;
  }

  // Reports a violation and returns nullopt when `name` is unbound or does
  // not have `want` kind.
  std::optional<ValueKind> RequireBound(const Node& node, const std::string& name) {
    std::optional<ValueKind> kind = Lookup(name);
    if (!kind) Report(node, ViolationReason::kUnboundIdentifier, "'" + name + "' is not bound");
    return kind;
  }

  bool RequireArity(const Node& node, std::size_t count) {
    if (node.children.size() == count) return true;
    Report(node, ViolationReason::kArityError,
           std::string(ToString(node.kind)) + " expects " + std::to_string(count) + " children");
    return false;
  }

  void RequireInt(const Node& expr) {
    std::optional<ValueKind> kind = CheckExpr(expr);
    if (kind == ValueKind::kArray) {
      Report(expr, ViolationReason::kKindMismatch, "integer expected, found array");
    }
  }

  void RequireArrayName(const Node& node) {
    std::optional<ValueKind> kind = RequireBound(node, node.name);
    if (kind == ValueKind::kInt) {
      Report(node, ViolationReason::kKindMismatch, "'" + node.name + "' is not an array");
    }
  }

  void CheckBlock(const Node& block) {
    if (block.kind != NodeKind::kBlock) {
      Report(block, ViolationReason::kArityError, "block expected");
      return;
    }
    scopes_.emplace_back();
    for (const Node& statement : block.children) CheckStatement(statement);
    scopes_.pop_back();
  }

  void CheckStatement(const Node& node) {
    switch (node.kind) {
      case NodeKind::kLet: {
        if (!RequireArity(node, 1)) return;
        std::optional<ValueKind> kind = CheckExpr(node.children[0]);
        Bind(node.name, kind.value_or(ValueKind::kInt));
        return;
      }
      case NodeKind::kAssign: {
        if (!RequireArity(node, 1)) return;
        std::optional<ValueKind> target = RequireBound(node, node.name);
        std::optional<ValueKind> value = CheckExpr(node.children[0]);
        if (target && value && *target != *value) {
          Report(node, ViolationReason::kKindMismatch,
                 "assignment to '" + node.name + "' changes its kind");
        }
        return;
      }
      case NodeKind::kArrayAssign:
        if (!RequireArity(node, 2)) return;
        RequireArrayName(node);
        RequireInt(node.children[0]);
        RequireInt(node.children[1]);
        return;
      case NodeKind::kIf:
        if (node.children.size() != 2 && node.children.size() != 3) {
          Report(node, ViolationReason::kArityError, "If expects 2 or 3 children");
          return;
        }
        RequireInt(node.children[0]);
        for (std::size_t i = 1; i < node.children.size(); ++i) CheckBlock(node.children[i]);
        return;
      case NodeKind::kWhile:
        if (!RequireArity(node, 2)) return;
        RequireInt(node.children[0]);
        CheckBlock(node.children[1]);
        return;
      case NodeKind::kReturn:
        if (!RequireArity(node, 1)) return;
        CheckExpr(node.children[0]);
        return;
      default:
        Report(node, ViolationReason::kArityError, "statement expected");
        return;
    }
  }

  std::optional<ValueKind> CheckExpr(const Node& node) {
    switch (node.kind) {
      case NodeKind::kIntLit:
        if (!RequireArity(node, 0)) return std::nullopt;
        return ValueKind::kInt;
      case NodeKind::kVar:
        if (!RequireArity(node, 0)) return std::nullopt;
        return RequireBound(node, node.name);
      case NodeKind::kIndex:
        if (!RequireArity(node, 1)) return std::nullopt;
        RequireArrayName(node);
        RequireInt(node.children[0]);
        return ValueKind::kInt;
      case NodeKind::kLen:
        if (!RequireArity(node, 0)) return std::nullopt;
        RequireArrayName(node);
        return ValueKind::kInt;
      case NodeKind::kUnary:
        if (!RequireArity(node, 1)) return std::nullopt;
        RequireInt(node.children[0]);
        return ValueKind::kInt;
      case NodeKind::kBinary:
        if (!RequireArity(node, 2)) return std::nullopt;
        RequireInt(node.children[0]);
        RequireInt(node.children[1]);
        return ValueKind::kInt;
      default:
        Report(node, ViolationReason::kArityError, "expression expected");
        return std::nullopt;
    }
  }

  ValidationReport& report_;
  std::vector<std::vector<std::pair<std::string, ValueKind>>> scopes_;
};

}  // namespace

ValidationReport Validate(const Ast& ast, std::size_t max_nodes) {
  ValidationReport report;
  std::size_t count = ast.NodeCount();
  if (count > max_nodes) {
    report.violations.push_back(Violation{ast.root().id, ViolationReason::kSizeExceeded,
                                          std::to_string(count) + " nodes exceed the cap of " +
                                              std::to_string(max_nodes)});
  }
  Checker(report).CheckProgram(ast.root());
  report.valid = report.violations.empty();
  return report;
}

}  // namespace locusgp
