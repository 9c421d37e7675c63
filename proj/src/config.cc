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

#include "pyfault/config.h"

#include <fnmatch.h>

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pyfault/dynamic_scan.h"
#include "pyfault/errors.h"

namespace pyfault {
namespace {

namespace fs = std::filesystem;

std::string Single(const CLI::ConfigItem& item, const std::string& origin) {
  if (item.inputs.size() != 1) {
    throw ConfigError(origin + ": " + item.fullname() +
                      " expects a single value");
  }
  return item.inputs.front();
}

template <typename T>
T Number(const CLI::ConfigItem& item, const std::string& origin) {
  const std::string text = Single(item, origin);
  T value{};
  if (!CLI::detail::lexical_conversion<T, T>({text}, value)) {
    throw ConfigError(origin + ": " + item.fullname() +
                      " is not a number: " + text);
  }
  return value;
}

bool Bool(const CLI::ConfigItem& item, const std::string& origin) {
  const std::string text = Single(item, origin);
  if (text == "true") return true;
  if (text == "false") return false;
  throw ConfigError(origin + ": " + item.fullname() +
                    " must be true or false");
}

bool Matches(const std::vector<std::string>& globs, const std::string& path) {
  return std::any_of(globs.begin(), globs.end(), [&](const std::string& g) {
    return fnmatch(g.c_str(), path.c_str(), 0) == 0;
  });
}

}  // namespace

Config ParseConfig(const std::string& text, const std::string& origin) {
  Config config;
  std::istringstream in(text);
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const CLI::Error& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  for (const CLI::ConfigItem& item : items) {
    const std::string key = item.fullname();
    // Section headers come through as bookkeeping items.
    if (item.name == "++" || item.name == "--") continue;
    if (key == "project_root") {
      config.project_root = Single(item, origin);
    } else if (key == "test_command") {
      config.test_command = Single(item, origin);
    } else if (key == "run_dir") {
      config.run_dir = Single(item, origin);
    } else if (key == "tracer_path") {
      config.tracer_path = Single(item, origin);
    } else if (key == "conversion_functions") {
      config.conversion_functions =
          std::set<std::string>(item.inputs.begin(), item.inputs.end());
    } else if (key == "seed") {
      config.seed = Number<std::uint64_t>(item, origin);
    } else if (key == "sample_ratio") {
      config.sample_ratio = Number<double>(item, origin);
    } else if (key == "timeout_factor") {
      config.timeout_factor = Number<double>(item, origin);
    } else if (key == "timeout_min_seconds") {
      config.timeout_min_seconds = Number<double>(item, origin);
    } else if (key == "workers") {
      config.workers = Number<int>(item, origin);
    } else if (key == "attribute_cap") {
      config.attribute_cap = Number<int>(item, origin);
    } else if (key == "include") {
      config.include = item.inputs;
    } else if (key == "exclude") {
      config.exclude = item.inputs;
    } else if (key == "include_asserts") {
      config.include_asserts = Bool(item, origin);
    } else if (key == "exhaustive_conditions") {
      config.exhaustive_conditions = Bool(item, origin);
    } else if (key == "static_only") {
      config.static_only = Bool(item, origin);
    } else {
      throw ConfigError(origin + ": unknown key " + key);
    }
  }
  return config;
}

Config LoadConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  Config config = ParseConfig(ss.str(), path);
  // A relative project root is taken from the config file's directory.
  const fs::path root(config.project_root);
  if (root.is_relative()) {
    config.project_root =
        (fs::absolute(path).parent_path() / root).lexically_normal().string();
  }
  return config;
}

void ValidateConfig(const Config& config) {
  if (config.test_command.empty()) {
    throw ConfigError("missing required key test_command");
  }
  if (config.test_command.find("{junit}") == std::string::npos) {
    throw ConfigError("test_command must contain the {junit} placeholder");
  }
  if (!fs::is_directory(config.project_root)) {
    throw ConfigError("project_root " + config.project_root +
                      " is not a directory");
  }
  if (!(config.sample_ratio > 0 && config.sample_ratio <= 1)) {
    throw ConfigError("sample_ratio must be in (0, 1]");
  }
  if (config.timeout_factor <= 0 || config.timeout_min_seconds <= 0) {
    throw ConfigError("timeouts must be positive");
  }
  if (config.workers < 1) throw ConfigError("workers must be at least 1");
  if (config.attribute_cap < 1) {
    throw ConfigError("attribute_cap must be at least 1");
  }
}

std::string ResolvedRunDir(const Config& config) {
  if (!config.run_dir.empty()) return config.run_dir;
  return (fs::path(config.project_root) / ".pyfault").string();
}

bool SelectsFile(const Config& config, const std::string& relative_path) {
  return Matches(config.include, relative_path) &&
         !Matches(config.exclude, relative_path);
}

std::vector<std::string> DiscoverFiles(const Config& config) {
  const fs::path root = fs::absolute(config.project_root);
  const fs::path run_dir = fs::absolute(ResolvedRunDir(config));
  std::vector<std::string> out;
  for (auto it = fs::recursive_directory_iterator(root);
       it != fs::recursive_directory_iterator(); ++it) {
    const std::string name = it->path().filename().string();
    std::error_code ec;
    if (it->is_directory() &&
        (name == "__pycache__" || name == ".git" ||
         fs::equivalent(it->path(), run_dir, ec))) {
      it.disable_recursion_pending();
      continue;
    }
    if (!it->is_regular_file() || it->path().extension() != ".py") continue;
    const std::string rel =
        fs::relative(it->path(), root).generic_string();
    if (SelectsFile(config, rel)) out.push_back(rel);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pyfault
