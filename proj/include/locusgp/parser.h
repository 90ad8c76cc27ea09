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

#ifndef LOCUSGP_PARSER_H_
#define LOCUSGP_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "locusgp/ast.h"

namespace locusgp {

// Raised on malformed ToyLang source. Lines and columns are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, std::string found);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
  std::string found_;
};

// Parses one ToyLang program. Node ids are assigned in pre-order from 0.
Ast Parse(std::string_view text);

}  // namespace locusgp

#endif  // LOCUSGP_PARSER_H_
