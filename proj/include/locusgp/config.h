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

#ifndef LOCUSGP_CONFIG_H_
#define LOCUSGP_CONFIG_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "locusgp/engine.h"

namespace locusgp {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message)
      : std::runtime_error("config line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct LoadedConfig {
  RunConfig config;
  // Recognised keys that the file did not set, in canonical order.
  std::vector<std::string> defaulted;
};

// Every recognised key, in canonical order.
const std::vector<std::string>& ConfigKeys();

// Parses line-oriented `key = value` text with '#' comments. Unknown keys and
// malformed values raise ConfigError; missing keys keep their defaults.
LoadedConfig ParseConfig(std::string_view text);

}  // namespace locusgp

#endif  // LOCUSGP_CONFIG_H_
