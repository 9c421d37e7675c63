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

#ifndef PYFAULT_COVERAGE_H_
#define PYFAULT_COVERAGE_H_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pyfault/candidate.h"

namespace pyfault {

// Executed lines of the unmutated program.
struct CoverageMap {
  std::map<std::string, std::set<int>> lines;
  // Optional per-test attribution: test id -> covered (file, line) pairs.
  std::map<std::string, std::set<std::pair<std::string, int>>> per_test;

  bool Covers(const std::string& file, int line) const;
};

// Format: {"<file>": [lines...], ..., "per_test": {"<test>": [[file, line]]}}.
CoverageMap CoverageFromJson(const nlohmann::json& j);
nlohmann::json CoverageToJson(const CoverageMap& coverage);
// Throws MissingCoverage when the file does not exist.
CoverageMap ReadCoverage(const std::string& path);

struct DroppedCandidate {
  CandidateRecord candidate;
  std::string reason;  // "uncovered"
};

struct PruneResult {
  std::vector<CandidateRecord> kept;
  std::vector<DroppedCandidate> dropped;
};

// Keeps static candidates whose start line was executed and every dynamic
// candidate. Throws MissingCoverage when `coverage` is null.
PruneResult Prune(const std::vector<CandidateRecord>& candidates,
                  const CoverageMap* coverage);

}  // namespace pyfault

#endif  // PYFAULT_COVERAGE_H_
