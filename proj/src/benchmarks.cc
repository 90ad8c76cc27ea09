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

#include "locusgp/benchmarks.h"

#include <cstdlib>

#include "locusgp/parser.h"
#include "locusgp/suite_io.h"

#ifndef LOCUSGP_BENCHMARK_DIR
#define LOCUSGP_BENCHMARK_DIR "benchmarks"
#endif

namespace locusgp {

namespace {

struct Entry {
  const char* name;
  const char* known_improvement;
};

constexpr Entry kEntries[] = {
    {"deadcode", "delete the statements whose results never reach the return"},
    {"hoist", "move the loop-invariant product out of the loop"},
    {"bubble", "tighten the inner bound to n - 1 - i"},
    {"hotlocus", "rewrite the first return as a single multiplication"},
};

}  // namespace

std::filesystem::path BenchmarkDir() {
  if (const char* env = std::getenv("LOCUSGP_BENCHMARKS"); env != nullptr && *env != '\0') {
    return env;
  }
  return LOCUSGP_BENCHMARK_DIR;
}

std::vector<BenchmarkSpec> BundledBenchmarks() {
  std::filesystem::path dir = BenchmarkDir();
  std::vector<BenchmarkSpec> specs;
  for (const Entry& entry : kEntries) {
    specs.push_back(BenchmarkSpec{entry.name, dir / (std::string(entry.name) + ".toy"),
                                  dir / (std::string(entry.name) + ".tests"),
                                  entry.known_improvement});
  }
  return specs;
}

std::optional<BenchmarkSpec> FindBenchmark(std::string_view name) {
  for (BenchmarkSpec& spec : BundledBenchmarks()) {
    if (spec.name == name) return spec;
  }
  return std::nullopt;
}

LoadedProgram LoadProgram(const std::filesystem::path& program_path,
                          const std::filesystem::path& suite_path) {
  LoadedProgram loaded;
  loaded.ast = Parse(ReadFile(program_path));
  loaded.suite = ParseSuite(ReadFile(suite_path));
  return loaded;
}

}  // namespace locusgp
