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

#ifndef LOCUSGP_PRINTER_H_
#define LOCUSGP_PRINTER_H_

#include <string>

#include "locusgp/ast.h"

namespace locusgp {

// Canonical source text: one statement per line, two-space indentation,
// single spaces around binary operators and only the parentheses that the
// precedence table requires. Parsing the result yields a structurally equal
// tree.
std::string Print(const Ast& ast);

// Prints any node (statement, expression, block or program) in canonical
// form, with the leading indentation given by `depth`.
std::string PrintNode(const Node& node, int depth = 0);

// A single-line rendering of `node`, for logs and mask dumps.
std::string Snippet(const Node& node, std::size_t max_chars = 40);

}  // namespace locusgp

#endif  // LOCUSGP_PRINTER_H_
