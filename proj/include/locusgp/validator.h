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

#ifndef LOCUSGP_VALIDATOR_H_
#define LOCUSGP_VALIDATOR_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "locusgp/ast.h"

namespace locusgp {

enum class ViolationReason { kKindMismatch, kUnboundIdentifier, kSizeExceeded, kArityError };

std::string_view ToString(ViolationReason reason);

struct Violation {
  NodeId node;
  ViolationReason reason;
  std::string detail;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;

  bool Has(ViolationReason reason) const;
};

// Static checks: scoping of identifiers, int/array kind agreement, node
// shape, and the node-count cap. A missing return is not a static error.
ValidationReport Validate(const Ast& ast, std::size_t max_nodes);

}  // namespace locusgp

#endif  // LOCUSGP_VALIDATOR_H_
