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

#ifndef PYFAULT_KILL_MATRIX_H_
#define PYFAULT_KILL_MATRIX_H_

#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "pyfault/runner.h"

namespace pyfault {

struct KillRow {
  std::string mutant_id;
  std::string tool;
  std::set<std::string> kills;
};

// Mutants x tests. Rows are sorted by mutant id and tests are sorted.
struct KillMatrix {
  std::vector<std::string> tests;
  std::vector<KillRow> rows;

  bool Killed(std::size_t row) const { return !rows[row].kills.empty(); }
  // Sorts rows and tests and widens `tests` to every killing test.
  void Normalize();
};

// One row per killed or survived outcome; invalid mutants are left out.
KillMatrix BuildKillMatrix(const std::vector<MutantOutcome>& outcomes,
                           const std::vector<std::string>& inventory,
                           const std::string& tool);

// Flat record form: {"schema_version": 1, "records": [{mutant_id, tool,
// test_id, killed}, ...]} with one record per mutant and test. A mutant
// row with no tests is written as a record with an empty test_id.
nlohmann::json KillMatrixToJson(const KillMatrix& matrix);
std::string KillMatrixToCsv(const KillMatrix& matrix);

// Accept either a bare record array or the object form. Throw SchemaError
// naming the first bad record.
KillMatrix KillMatrixFromJson(const nlohmann::json& j);
KillMatrix KillMatrixFromCsv(const std::string& text);
// Picks the format from the extension (.csv, otherwise JSON).
KillMatrix ReadKillMatrix(const std::string& path);
void WriteKillMatrix(const KillMatrix& matrix, const std::string& path);

}  // namespace pyfault

#endif  // PYFAULT_KILL_MATRIX_H_
