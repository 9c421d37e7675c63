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

#include "pyfault/coverage.h"

#include <filesystem>
#include <fstream>

#include "pyfault/errors.h"

namespace pyfault {

using nlohmann::json;

bool CoverageMap::Covers(const std::string& file, int line) const {
  auto it = lines.find(file);
  return it != lines.end() && it->second.count(line) > 0;
}

CoverageMap CoverageFromJson(const json& j) {
  if (!j.is_object()) throw SchemaError(0, "coverage must be a JSON object");
  CoverageMap coverage;
  std::size_t index = 0;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "per_test") {
        for (const auto& [test, pairs] : value.items()) {
          auto& covered = coverage.per_test[test];
          for (const json& pair : pairs) {
            covered.emplace(pair.at(0).get<std::string>(), pair.at(1).get<int>());
          }
        }
      } else {
        auto& lines = coverage.lines[key];
        for (const json& line : value) lines.insert(line.get<int>());
      }
    } catch (const json::exception& e) {
      throw SchemaError(index, "coverage entry '" + key + "': " + e.what());
    }
    ++index;
  }
  return coverage;
}

json CoverageToJson(const CoverageMap& coverage) {
  json j = json::object();
  for (const auto& [file, lines] : coverage.lines) j[file] = lines;
  if (!coverage.per_test.empty()) {
    json per_test = json::object();
    for (const auto& [test, pairs] : coverage.per_test) {
      json list = json::array();
      for (const auto& [file, line] : pairs) list.push_back({file, line});
      per_test[test] = std::move(list);
    }
    j["per_test"] = std::move(per_test);
  }
  return j;
}

CoverageMap ReadCoverage(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw MissingCoverage("coverage file " + path +
                          " not found; run the trace command first");
  }
  std::ifstream in(path, std::ios::binary);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError(0, "coverage file " + path + ": " + e.what());
  }
  return CoverageFromJson(j);
}

PruneResult Prune(const std::vector<CandidateRecord>& candidates,
                  const CoverageMap* coverage) {
  if (coverage == nullptr) {
    throw MissingCoverage("no coverage data; run the trace command first");
  }
  PruneResult result;
  for (const CandidateRecord& c : candidates) {
    if (!IsStaticOperator(c.label) ||
        coverage->Covers(c.loc.file, c.loc.start_line)) {
      result.kept.push_back(c);
    } else {
      result.dropped.push_back(DroppedCandidate{c, "uncovered"});
    }
  }
  return result;
}

}  // namespace pyfault
