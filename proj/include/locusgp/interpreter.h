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

#ifndef LOCUSGP_INTERPRETER_H_
#define LOCUSGP_INTERPRETER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "locusgp/ast.h"

namespace locusgp {

// A ToyLang runtime value: an integer or an integer array.
class Value {
 public:
  Value() : data_(std::int64_t{0}) {}
  static Value Int(std::int64_t value) { return Value(value); }
  static Value Array(std::vector<std::int64_t> elements) { return Value(std::move(elements)); }

  ValueKind kind() const { return is_int() ? ValueKind::kInt : ValueKind::kArray; }
  bool is_int() const { return std::holds_alternative<std::int64_t>(data_); }
  bool is_array() const { return !is_int(); }

  std::int64_t as_int() const { return std::get<std::int64_t>(data_); }
  const std::vector<std::int64_t>& as_array() const {
    return std::get<std::vector<std::int64_t>>(data_);
  }
  std::vector<std::int64_t>& mutable_array() { return std::get<std::vector<std::int64_t>>(data_); }

  // "7" or "[1,2,3]"; the notation of the test-suite file format.
  std::string ToString() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  explicit Value(std::int64_t value) : data_(value) {}
  explicit Value(std::vector<std::int64_t> elements) : data_(std::move(elements)) {}

  std::variant<std::int64_t, std::vector<std::int64_t>> data_;
};

enum class RuntimeErrorKind { kDivByZero, kIndexOutOfRange, kUnboundVariable, kMissingReturn };

std::string_view ToString(RuntimeErrorKind kind);

// Per-node visit counts of one evaluation.
class Trace {
 public:
  std::uint64_t count(NodeId id) const {
    return id.value < counts_.size() ? counts_[id.value] : 0;
  }
  void Add(NodeId id) {
    if (id.value >= counts_.size()) counts_.resize(id.value + 1, 0);
    ++counts_[id.value];
  }
  // Adds every count of `other` into this trace.
  void Merge(const Trace& other);
  std::uint64_t Total() const;
  // Nonzero (node, count) pairs in increasing id order.
  std::vector<std::pair<NodeId, std::uint64_t>> Entries() const;

  friend bool operator==(const Trace& a, const Trace& b);

 private:
  std::vector<std::uint64_t> counts_;
};

struct EvalResult {
  enum class Outcome { kOk, kRuntimeError, kBudgetExceeded };

  Outcome outcome = Outcome::kOk;
  std::optional<Value> value;  // set iff outcome == kOk
  RuntimeErrorKind error = RuntimeErrorKind::kMissingReturn;  // meaningful iff kRuntimeError
  std::uint64_t steps = 0;
  Trace trace;

  bool ok() const { return outcome == Outcome::kOk; }
  std::string Describe() const;

  friend bool operator==(const EvalResult&, const EvalResult&) = default;
};

// Runs the program on `args`, charging one step per node visit: each Block
// when entered, each statement when dispatched and each expression when
// evaluated. Evaluation stops with kBudgetExceeded as soon as a further
// step would exceed `budget`, so `steps <= budget` always holds.
//
// Array arguments are copied in. Arithmetic wraps modulo 2^64; '&&' and
// '||' do not evaluate their right operand when the left decides.
//
// Throws std::invalid_argument if `args` does not match the parameter list
// or `budget` is zero.
EvalResult Evaluate(const Ast& ast, std::span<const Value> args, std::uint64_t budget);

}  // namespace locusgp

#endif  // LOCUSGP_INTERPRETER_H_
