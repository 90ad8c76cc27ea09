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

#include "support/random_program.h"

#include <limits>
#include <string>

namespace locusgp::testing {

namespace {

struct Name {
  std::string name;
  ValueKind kind;
};

class Generator {
 public:
  explicit Generator(Rng& rng) : rng_(rng) {}

  Ast Program() {
    std::vector<Node> params;
    std::size_t count = 1 + rng_.Below(3);
    scopes_.emplace_back();
    for (std::size_t i = 0; i < count; ++i) {
      ValueKind kind = rng_.Bernoulli(0.35) ? ValueKind::kArray : ValueKind::kInt;
      std::string name = "p" + std::to_string(i);
      params.push_back(MakeParam(name, kind));
      scopes_.back().push_back({name, kind});
    }
    Node body = Block(0, true);
    scopes_.pop_back();
    return Ast::FromRoot(MakeProgram("f", std::move(params), std::move(body)));
  }

 private:
  std::vector<Name> Visible(ValueKind kind) const {
    std::vector<Name> out;
    for (const auto& scope : scopes_) {
      for (const Name& n : scope) {
        if (n.kind == kind) out.push_back(n);
      }
    }
    return out;
  }

  std::string Fresh() { return "v" + std::to_string(next_name_++); }

  std::int64_t Literal() {
    switch (rng_.Below(8)) {
      case 0:
        return std::numeric_limits<std::int64_t>::max();
      case 1:
        return static_cast<std::int64_t>(rng_.Below(1000));
      default:
        return static_cast<std::int64_t>(rng_.Below(10));
    }
  }

  Node IntExpr(int depth) {
    std::vector<Name> ints = Visible(ValueKind::kInt);
    std::vector<Name> arrays = Visible(ValueKind::kArray);
    std::size_t choice = depth <= 0 ? rng_.Below(4) : rng_.Below(9);
    switch (choice) {
      case 0:
      case 1:
        return MakeIntLit(Literal());
      case 2:
        if (!ints.empty()) return MakeVar(ints[rng_.Below(ints.size())].name);
        return MakeIntLit(Literal());
      case 3:
        if (!arrays.empty()) return MakeLen(arrays[rng_.Below(arrays.size())].name);
        return MakeIntLit(Literal());
      case 4:
        if (!arrays.empty()) {
          return MakeIndex(arrays[rng_.Below(arrays.size())].name, IntExpr(depth - 1));
        }
        return MakeUnary(UnaryOp::kNeg, IntExpr(depth - 1));
      case 5:
        return MakeUnary(rng_.Bernoulli(0.5) ? UnaryOp::kNeg : UnaryOp::kNot, IntExpr(depth - 1));
      default:
        return MakeBinary(static_cast<BinaryOp>(rng_.Below(kNumBinaryOps)), IntExpr(depth - 1),
                          IntExpr(depth - 1));
    }
  }

  // An expression of either kind, preferring ints.
  std::pair<Node, ValueKind> AnyExpr(int depth) {
    std::vector<Name> arrays = Visible(ValueKind::kArray);
    if (!arrays.empty() && rng_.Bernoulli(0.15)) {
      return {MakeVar(arrays[rng_.Below(arrays.size())].name), ValueKind::kArray};
    }
    return {IntExpr(depth), ValueKind::kInt};
  }

  Node Block(int depth, bool is_body) {
    scopes_.emplace_back();
    std::vector<Node> statements;
    std::size_t count = rng_.Below(depth == 0 ? 6 : 4);
    for (std::size_t i = 0; i < count; ++i) statements.push_back(Statement(depth));
    if (is_body || rng_.Bernoulli(0.2)) statements.push_back(MakeReturn(AnyExpr(3).first));
    scopes_.pop_back();
    return MakeBlock(std::move(statements));
  }

  Node Statement(int depth) {
    std::size_t choice = rng_.Below(depth >= 2 ? 4 : 7);
    switch (choice) {
      case 0:
      case 1: {
        auto [value, kind] = AnyExpr(3);
        std::vector<Name> same = Visible(kind);
        std::string name = !same.empty() && rng_.Bernoulli(0.2) ? same[0].name : Fresh();
        scopes_.back().push_back({name, kind});
        return MakeLet(name, std::move(value));
      }
      case 2: {
        std::vector<Name> ints = Visible(ValueKind::kInt);
        if (ints.empty()) return MakeLet(Fresh(), IntExpr(2));
        return MakeAssign(ints[rng_.Below(ints.size())].name, IntExpr(3));
      }
      case 3: {
        std::vector<Name> arrays = Visible(ValueKind::kArray);
        if (arrays.empty()) return MakeReturn(IntExpr(2));
        return MakeArrayAssign(arrays[rng_.Below(arrays.size())].name, IntExpr(2), IntExpr(2));
      }
      case 4: {
        Node cond = IntExpr(2);
        Node then_block = Block(depth + 1, false);
        if (rng_.Bernoulli(0.5)) return MakeIf(std::move(cond), std::move(then_block), Block(depth + 1, false));
        return MakeIf(std::move(cond), std::move(then_block));
      }
      case 5: {
        if (rng_.Bernoulli(0.15)) return MakeWhile(IntExpr(2), Block(depth + 1, false));
        // Counter loop: let c = 0; while c < k { ...; c = c + 1; } as one If
        // wrapper so the counter stays scoped.
        std::string counter = Fresh();
        scopes_.emplace_back();
        scopes_.back().push_back({counter, ValueKind::kInt});
        Node body = Block(depth + 1, false);
        body.children.push_back(MakeAssign(
            counter, MakeBinary(BinaryOp::kAdd, MakeVar(counter), MakeIntLit(1))));
        scopes_.pop_back();
        Node loop = MakeWhile(
            MakeBinary(BinaryOp::kLt, MakeVar(counter), MakeIntLit(static_cast<std::int64_t>(rng_.Below(6)))),
            std::move(body));
        std::vector<Node> wrapper;
        wrapper.push_back(MakeLet(counter, MakeIntLit(0)));
        wrapper.push_back(std::move(loop));
        return MakeIf(MakeIntLit(1), MakeBlock(std::move(wrapper)));
      }
      default:
        return MakeReturn(AnyExpr(3).first);
    }
  }

  Rng& rng_;
  std::vector<std::vector<Name>> scopes_;
  int next_name_ = 0;
};

}  // namespace

Ast RandomProgram(Rng& rng) { return Generator(rng).Program(); }

std::vector<Value> RandomArgs(const Ast& ast, Rng& rng) {
  std::vector<Value> args;
  const Node& program = ast.root();
  for (std::size_t i = 0; i + 1 < program.children.size(); ++i) {
    if (program.children[i].param_kind == ValueKind::kInt) {
      args.push_back(Value::Int(rng.Range(-10, 10)));
    } else {
      std::vector<std::int64_t> elements(rng.Below(6));
      for (auto& e : elements) e = rng.Range(-10, 10);
      args.push_back(Value::Array(std::move(elements)));
    }
  }
  return args;
}

}  // namespace locusgp::testing
