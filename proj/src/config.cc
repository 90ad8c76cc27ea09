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

#include "locusgp/config.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <set>

namespace locusgp {

namespace {

std::string_view Trim(std::string_view text) {
  const char* kSpace = " \t\r";
  std::size_t first = text.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  std::size_t last = text.find_last_not_of(kSpace);
  return text.substr(first, last - first + 1);
}

std::uint64_t ToCount(int line, std::string_view value) {
  std::uint64_t result = 0;
  auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), result);
  if (ec != std::errc() || end != value.data() + value.size()) {
    throw ConfigError(line, "expected a non-negative integer, got '" + std::string(value) + "'");
  }
  return result;
}

double ToReal(int line, std::string_view value) {
  std::string text(value);
  char* end = nullptr;
  double result = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw ConfigError(line, "expected a number, got '" + text + "'");
  }
  return result;
}

bool ToBool(int line, std::string_view value) {
  if (value == "true" || value == "on" || value == "1") return true;
  if (value == "false" || value == "off" || value == "0") return false;
  throw ConfigError(line, "expected true or false, got '" + std::string(value) + "'");
}

using Setter = std::function<void(RunConfig&, int, std::string_view)>;

const std::vector<std::pair<std::string, Setter>>& Setters() {
  static const std::vector<std::pair<std::string, Setter>> kSetters = {
      {"population_size",
       [](RunConfig& c, int l, std::string_view v) { c.population_size = ToCount(l, v); }},
      {"generations",
       [](RunConfig& c, int l, std::string_view v) { c.generations = ToCount(l, v); }},
      {"tournament_k",
       [](RunConfig& c, int l, std::string_view v) { c.tournament_k = ToCount(l, v); }},
      {"elitism", [](RunConfig& c, int l, std::string_view v) { c.elitism = ToCount(l, v); }},
      {"per_test_budget",
       [](RunConfig& c, int l, std::string_view v) { c.per_test_budget = ToCount(l, v); }},
      {"rng_seed", [](RunConfig& c, int l, std::string_view v) { c.rng_seed = ToCount(l, v); }},
      {"mutation_rate",
       [](RunConfig& c, int l, std::string_view v) { c.variation.mutation_rate = ToReal(l, v); }},
      {"crossover_rate",
       [](RunConfig& c, int l, std::string_view v) { c.variation.crossover_rate = ToReal(l, v); }},
      {"max_nodes_factor",
       [](RunConfig& c, int l, std::string_view v) { c.max_nodes_factor = ToReal(l, v); }},
      {"max_expr_depth",
       [](RunConfig& c, int l, std::string_view v) {
         c.variation.max_fresh_expr_depth = static_cast<int>(ToCount(l, v));
       }},
      {"policy",
       [](RunConfig& c, int l, std::string_view v) {
         auto kind = ParsePolicyKind(v);
         if (!kind) throw ConfigError(l, "policy must be uniform, static or dynamic");
         c.policy.kind = *kind;
       }},
      {"alpha_up", [](RunConfig& c, int l, std::string_view v) { c.policy.alpha_up = ToReal(l, v); }},
      {"alpha_neutral",
       [](RunConfig& c, int l, std::string_view v) { c.policy.alpha_neutral = ToReal(l, v); }},
      {"alpha_invalid",
       [](RunConfig& c, int l, std::string_view v) { c.policy.alpha_invalid = ToReal(l, v); }},
      {"gamma", [](RunConfig& c, int l, std::string_view v) { c.policy.gamma = ToReal(l, v); }},
      {"neighborhood_depth",
       [](RunConfig& c, int l, std::string_view v) { c.policy.neighborhood_depth = ToCount(l, v); }},
      {"w_min", [](RunConfig& c, int l, std::string_view v) { c.policy.bounds.w_min = ToReal(l, v); }},
      {"w_max", [](RunConfig& c, int l, std::string_view v) { c.policy.bounds.w_max = ToReal(l, v); }},
      {"writeback",
       [](RunConfig& c, int l, std::string_view v) {
         if (v == "childOnly") {
           c.policy.writeback = Writeback::kChildOnly;
         } else if (v == "parentAndChild") {
           c.policy.writeback = Writeback::kParentAndChild;
         } else {
           throw ConfigError(l, "writeback must be childOnly or parentAndChild");
         }
       }},
      {"granularity_inference",
       [](RunConfig& c, int l, std::string_view v) {
         c.policy.granularity_inference = ToBool(l, v);
       }},
      {"granularity_dist",
       [](RunConfig& c, int l, std::string_view v) {
         GranularityVector dist{};
         std::size_t count = 0;
         std::size_t start = 0;
         while (start <= v.size()) {
           std::size_t comma = v.find(',', start);
           std::string_view part =
               Trim(v.substr(start, comma == std::string_view::npos ? v.npos : comma - start));
           if (count == 3) throw ConfigError(l, "granularity_dist takes three numbers");
           dist[count++] = ToReal(l, part);
           if (comma == std::string_view::npos) break;
           start = comma + 1;
         }
         if (count != 3) throw ConfigError(l, "granularity_dist takes three numbers");
         c.policy.granularity_dist = dist;
       }},
      {"worsen_increases",
       [](RunConfig& c, int l, std::string_view v) { c.policy.worsen_increases = ToBool(l, v); }},
  };
  return kSetters;
}

}  // namespace

const std::vector<std::string>& ConfigKeys() {
  static const std::vector<std::string> kKeys = [] {
    std::vector<std::string> keys;
    for (const auto& [key, setter] : Setters()) keys.push_back(key);
    return keys;
  }();
  return kKeys;
}

LoadedConfig ParseConfig(std::string_view text) {
  LoadedConfig loaded;
  std::set<std::string> seen;
  int line_number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t newline = text.find('\n', start);
    std::string_view line =
        text.substr(start, newline == std::string_view::npos ? text.npos : newline - start);
    start = newline == std::string_view::npos ? text.size() : newline + 1;
    ++line_number;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    std::size_t equals = line.find('=');
    if (equals == std::string_view::npos) throw ConfigError(line_number, "expected key = value");
    std::string key(Trim(line.substr(0, equals)));
    std::string_view value = Trim(line.substr(equals + 1));
    const auto& setters = Setters();
    auto it = std::find_if(setters.begin(), setters.end(),
                           [&](const auto& entry) { return entry.first == key; });
    if (it == setters.end()) throw ConfigError(line_number, "unknown key '" + key + "'");
    if (!seen.insert(key).second) throw ConfigError(line_number, "duplicate key '" + key + "'");
    it->second(loaded.config, line_number, value);
  }
  for (const std::string& key : ConfigKeys()) {
    if (seen.count(key) == 0) loaded.defaulted.push_back(key);
  }
  return loaded;
}

}  // namespace locusgp
