// Copyright 2026 The pyfault Authors
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

#ifndef PYFAULT_CONFIG_H_
#define PYFAULT_CONFIG_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pyfault/dynamic_scan.h"

namespace pyfault {

struct Config {
  std::string project_root = ".";
  std::string test_command;
  std::string run_dir;      // defaults to <project_root>/.pyfault
  std::string tracer_path;  // directory put on PYTHONPATH by `trace`
  std::set<std::string> conversion_functions = DefaultConversionFunctions();
  std::uint64_t seed = 0;
  double sample_ratio = 1.0;
  double timeout_factor = 5;
  double timeout_min_seconds = 10;
  int workers = 1;
  int attribute_cap = 256;
  std::vector<std::string> include = {"*.py"};
  std::vector<std::string> exclude = {
      ".*",          "*/.*",           "tests/*",    "test/*",
      "*/tests/*",   "test_*.py",      "*/test_*.py", "*_test.py",
      "conftest.py", "*/conftest.py",  "setup.py"};
  bool include_asserts = false;
  bool exhaustive_conditions = false;
  bool static_only = false;
};

// Parses TOML-style `key = value` lines. Unknown keys and malformed
// values throw ConfigError. `origin` names the source in messages.
Config ParseConfig(const std::string& text, const std::string& origin);
Config LoadConfig(const std::string& path);

// Throws ConfigError naming the first missing or out-of-range key.
void ValidateConfig(const Config& config);

std::string ResolvedRunDir(const Config& config);

// Whether a project-relative path passes the include/exclude globs.
bool SelectsFile(const Config& config, const std::string& relative_path);

// Project-relative paths of the selected Python files, sorted.
std::vector<std::string> DiscoverFiles(const Config& config);

}  // namespace pyfault

#endif  // PYFAULT_CONFIG_H_
