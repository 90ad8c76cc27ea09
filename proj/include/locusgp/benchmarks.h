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

#ifndef LOCUSGP_BENCHMARKS_H_
#define LOCUSGP_BENCHMARKS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "locusgp/ast.h"
#include "locusgp/fitness.h"

namespace locusgp {

struct BenchmarkSpec {
  std::string name;
  std::filesystem::path program_path;
  std::filesystem::path suite_path;
  std::string known_improvement;
};

// $LOCUSGP_BENCHMARKS if set, else the directory baked in at build time.
std::filesystem::path BenchmarkDir();

std::vector<BenchmarkSpec> BundledBenchmarks();
std::optional<BenchmarkSpec> FindBenchmark(std::string_view name);

struct LoadedProgram {
  Ast ast;
  TestSuite suite;
};

// Parses both files; throws ParseError, SuiteError or std::runtime_error.
LoadedProgram LoadProgram(const std::filesystem::path& program_path,
                          const std::filesystem::path& suite_path);

}  // namespace locusgp

#endif  // LOCUSGP_BENCHMARKS_H_
