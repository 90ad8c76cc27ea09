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

#include "locusgp/interpreter.h"

#include <limits>
#include <stdexcept>
#include <utility>

namespace locusgp {

std::string Value::ToString() const {
  if (is_int()) return std::to_string(as_int());
  std::string out = "[";
  const auto& elements = as_array();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elements[i]);
  }
  out += ']';
  return out;
}

std::string_view ToString(RuntimeErrorKind kind) {
  switch (kind) {
    case RuntimeErrorKind::kDivByZero:
      return "divByZero";
    case RuntimeErrorKind::kIndexOutOfRange:
      return "indexOutOfRange";
    case RuntimeErrorKind::kUnboundVariable:
      return "unboundVariable";
    case RuntimeErrorKind::kMissingReturn:
      return "missingReturn";
  }
  return "?";
}

void Trace::Merge(const Trace& other) {
  if (other.counts_.size() > counts_.size()) counts_.resize(other.counts_.size(), 0);
  for (std::size_t i = 0; i < other.counts_.size(); ++i) counts_[i] += other.counts_[i];
}

std::uint64_t Trace::Total() const {
  std::uint64_t total = 0;
  for (std::uint64_t c : counts_) total += c;
  return total;
}

std::vector<std::pair<NodeId, std::uint64_t>> Trace::Entries() const {
  std::vector<std::pair<NodeId, std::uint64_t>> entries;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] != 0) entries.emplace_back(NodeId{static_cast<std::uint32_t>(i)}, counts_[i]);
  }
  return entries;
}

bool operator==(const Trace& a, const Trace& b) { return a.Entries() == b.Entries(); }

std::string EvalResult::Describe() const {
  switch (outcome) {
    case Outcome::kOk:
      return value->ToString();
    case Outcome::kRuntimeError:
      return "error(" + std::string(ToString(error)) + ")";
    case Outcome::kBudgetExceeded:
      return "budgetExceeded";
  }
  return "?";
}

namespace {

struct BudgetStop {};
struct Fault {
  RuntimeErrorKind kind;
};

std::int64_t Wrap(std::uint64_t bits) { return static_cast<std::int64_t>(bits); }

class Interpreter {
 public:
  explicit Interpreter(std::uint64_t budget) : budget_(budget) {}

  EvalResult Run(const Ast& ast, std::span<const Value> args) {
    const Node& program = ast.program();
    for (std::size_t i = 0; i + 1 < program.children.size(); ++i) {
      bindings_.push_back(Binding{program.children[i].name, args[i]});
    }
    EvalResult result;
    try {
      if (ExecBlock(ast.body())) {
        result.outcome = EvalResult::Outcome::kOk;
        result.value = std::move(return_value_);
      } else {
        result.outcome = EvalResult::Outcome::kRuntimeError;
        result.error = RuntimeErrorKind::kMissingReturn;
      }
    } catch (const BudgetStop&) {
      result.outcome = EvalResult::Outcome::kBudgetExceeded;
    } catch (const Fault& fault) {
      result.outcome = EvalResult::Outcome::kRuntimeError;
      result.error = fault.kind;
    }
    result.steps = steps_;
    result.trace = std::move(trace_);
    return result;
  }

 private:
  struct Binding {
    std::string_view name;
    Value value;
  };

  void Charge(const Node& node) {
    if (steps_ == budget_) throw BudgetStop{};
    ++steps_;
    trace_.Add(node.id);
  }

  Value& Lookup(std::string_view name) {
    for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
      if (it->name == name) return it->value;
    }
    throw Fault{RuntimeErrorKind::kUnboundVariable};
  }

  std::vector<std::int64_t>& LookupArray(std::string_view name) {
    Value& value = Lookup(name);
    if (!value.is_array()) throw std::invalid_argument("evaluate requires a valid program");
    return value.mutable_array();
  }

  // Returns true when a Return statement executed.
  bool ExecBlock(const Node& block) {
    Charge(block);
    std::size_t mark = bindings_.size();
    bool returned = false;
    for (const Node& statement : block.children) {
      if (ExecStatement(statement)) {
        returned = true;
        break;
      }
    }
    bindings_.resize(mark);
    return returned;
  }

  bool ExecStatement(const Node& node) {
    Charge(node);
    switch (node.kind) {
      case NodeKind::kLet: {
        Value value = Eval(node.children[0]);
        bindings_.push_back(Binding{node.name, std::move(value)});
        return false;
      }
      case NodeKind::kAssign: {
        Value value = Eval(node.children[0]);
        Lookup(node.name) = std::move(value);
        return false;
      }
      case NodeKind::kArrayAssign: {
        std::int64_t index = EvalInt(node.children[0]);
        std::int64_t value = EvalInt(node.children[1]);
        auto& elements = LookupArray(node.name);
        if (index < 0 || static_cast<std::uint64_t>(index) >= elements.size()) {
          throw Fault{RuntimeErrorKind::kIndexOutOfRange};
        }
        elements[static_cast<std::size_t>(index)] = value;
        return false;
      }
      case NodeKind::kIf:
        if (EvalInt(node.children[0]) != 0) return ExecBlock(node.children[1]);
        if (node.children.size() > 2) return ExecBlock(node.children[2]);
        return false;
      case NodeKind::kWhile:
        while (EvalInt(node.children[0]) != 0) {
          if (ExecBlock(node.children[1])) return true;
        }
        return false;
      case NodeKind::kReturn:
        return_value_ = Eval(node.children[0]);
        return true;
      default:
        throw std::invalid_argument("evaluate requires a valid program");
    }
  }

  std::int64_t EvalInt(const Node& node) {
    Value value = Eval(node);
    if (!value.is_int()) throw std::invalid_argument("evaluate requires a valid program");
    return value.as_int();
  }

  Value Eval(const Node& node) {
    Charge(node);
    switch (node.kind) {
      case NodeKind::kIntLit:
        return Value::Int(node.value);
      case NodeKind::kVar:
        return Lookup(node.name);
      case NodeKind::kIndex: {
        std::int64_t index = EvalInt(node.children[0]);
        const auto& elements = LookupArray(node.name);
        if (index < 0 || static_cast<std::uint64_t>(index) >= elements.size()) {
          throw Fault{RuntimeErrorKind::kIndexOutOfRange};
        }
        return Value::Int(elements[static_cast<std::size_t>(index)]);
      }
      case NodeKind::kLen:
        return Value::Int(static_cast<std::int64_t>(LookupArray(node.name).size()));
      case NodeKind::kUnary: {
        std::int64_t operand = EvalInt(node.children[0]);
        if (node.unary_op == UnaryOp::kNeg) {
          return Value::Int(Wrap(0 - static_cast<std::uint64_t>(operand)));
        }
        return Value::Int(operand == 0 ? 1 : 0);
      }
      case NodeKind::kBinary:
        return Value::Int(EvalBinary(node));
      default:
        throw std::invalid_argument("evaluate requires a valid program");
    }
  }

  std::int64_t EvalBinary(const Node& node) {
    std::int64_t left = EvalInt(node.children[0]);
    if (node.binary_op == BinaryOp::kAnd) {
      if (left == 0) return 0;
      return EvalInt(node.children[1]) != 0 ? 1 : 0;
    }
    if (node.binary_op == BinaryOp::kOr) {
      if (left != 0) return 1;
      return EvalInt(node.children[1]) != 0 ? 1 : 0;
    }
    std::int64_t right = EvalInt(node.children[1]);
    auto l = static_cast<std::uint64_t>(left);
    auto r = static_cast<std::uint64_t>(right);
    constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
    switch (node.binary_op) {
      case BinaryOp::kAdd:
        return Wrap(l + r);
      case BinaryOp::kSub:
        return Wrap(l - r);
      case BinaryOp::kMul:
        return Wrap(l * r);
      case BinaryOp::kDiv:
        if (right == 0) throw Fault{RuntimeErrorKind::kDivByZero};
        if (left == kMin && right == -1) return kMin;
        return left / right;
      case BinaryOp::kMod:
        if (right == 0) throw Fault{RuntimeErrorKind::kDivByZero};
        if (left == kMin && right == -1) return 0;
        return left % right;
      case BinaryOp::kLt:
        return left < right;
      case BinaryOp::kLe:
        return left <= right;
      case BinaryOp::kGt:
        return left > right;
      case BinaryOp::kGe:
        return left >= right;
      case BinaryOp::kEq:
        return left == right;
      case BinaryOp::kNe:
        return left != right;
      default:
        return 0;
    }
  }

  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  Trace trace_;
  std::vector<Binding> bindings_;
  Value return_value_;
};

}  // namespace

EvalResult Evaluate(const Ast& ast, std::span<const Value> args, std::uint64_t budget) {
  if (budget == 0) throw std::invalid_argument("evaluation budget must be at least 1");
  const Node& program = ast.program();
  std::size_t arity = program.children.empty() ? 0 : program.children.size() - 1;
  if (args.size() != arity) {
    throw std::invalid_argument("expected " + std::to_string(arity) + " arguments, got " +
                                std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < arity; ++i) {
    if (args[i].kind() != program.children[i].param_kind) {
      throw std::invalid_argument("argument " + std::to_string(i + 1) + " has the wrong kind");
    }
  }
  return Interpreter(budget).Run(ast, args);
}

}  // namespace locusgp
