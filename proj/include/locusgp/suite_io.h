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

#ifndef LOCUSGP_SUITE_IO_H_
#define LOCUSGP_SUITE_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "locusgp/fitness.h"

namespace locusgp {

class SuiteError : public std::runtime_error {
 public:
  SuiteError(int line, const std::string& message)
      : std::runtime_error("tests line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// One case per line, `args -> expected`, arguments separated by commas and
// arrays bracketed: `5, [1,2] -> 7`. '#' starts a comment.
TestSuite ParseSuite(std::string_view text);

std::string FormatArgs(const std::vector<Value>& args);

// Reads a whole file; throws std::runtime_error if it cannot be opened.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace locusgp

#endif  // LOCUSGP_SUITE_IO_H_
