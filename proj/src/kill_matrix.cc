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

#include "pyfault/kill_matrix.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "pyfault/errors.h"

namespace pyfault {
namespace {

using json = nlohmann::json;

struct Record {
  std::string mutant_id;
  std::string tool;
  std::string test_id;
  bool killed = false;
};

KillMatrix FromRecords(const std::vector<Record>& records) {
  std::map<std::string, KillRow> rows;
  std::set<std::string> tests;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const Record& r = records[i];
    if (r.mutant_id.empty()) throw SchemaError(i, "empty mutant_id");
    auto [it, fresh] = rows.try_emplace(r.mutant_id);
    KillRow& row = it->second;
    if (fresh) {
      row.mutant_id = r.mutant_id;
      row.tool = r.tool;
    } else if (row.tool != r.tool) {
      throw SchemaError(i, "mutant " + r.mutant_id + " has tools " +
                               row.tool + " and " + r.tool);
    }
    if (r.test_id.empty()) {
      if (r.killed) throw SchemaError(i, "killed record without test_id");
      continue;
    }
    tests.insert(r.test_id);
    if (r.killed) row.kills.insert(r.test_id);
  }
  KillMatrix m;
  m.tests.assign(tests.begin(), tests.end());
  for (auto& [id, row] : rows) m.rows.push_back(std::move(row));
  return m;
}

std::vector<Record> ToRecords(const KillMatrix& matrix) {
  std::vector<Record> out;
  for (const KillRow& row : matrix.rows) {
    if (matrix.tests.empty()) {
      out.push_back(Record{row.mutant_id, row.tool, "", false});
    }
    for (const std::string& t : matrix.tests) {
      out.push_back(Record{row.mutant_id, row.tool, t, row.kills.count(t) > 0});
    }
  }
  return out;
}

bool ParseBool(std::size_t index, const std::string& text) {
  if (text == "1" || text == "true" || text == "True") return true;
  if (text == "0" || text == "false" || text == "False") return false;
  throw SchemaError(index, "killed must be a boolean, got '" + text + "'");
}

// Splits one RFC 4180 line; quoted fields double their quotes.
std::vector<std::string> SplitCsv(std::size_t index, const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c != '"') {
        fields.back() += c;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw SchemaError(index, "unterminated quote");
  return fields;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void KillMatrix::Normalize() {
  std::set<std::string> all(tests.begin(), tests.end());
  for (const KillRow& row : rows) all.insert(row.kills.begin(), row.kills.end());
  tests.assign(all.begin(), all.end());
  std::sort(rows.begin(), rows.end(), [](const KillRow& a, const KillRow& b) {
    return a.mutant_id < b.mutant_id;
  });
}

KillMatrix BuildKillMatrix(const std::vector<MutantOutcome>& outcomes,
                           const std::vector<std::string>& inventory,
                           const std::string& tool) {
  KillMatrix m;
  m.tests = inventory;
  for (const MutantOutcome& o : outcomes) {
    if (o.status != MutantStatus::kKilled && o.status != MutantStatus::kSurvived) {
      continue;
    }
    m.rows.push_back(KillRow{o.mutant_id, tool, o.killing_tests});
  }
  m.Normalize();
  return m;
}

json KillMatrixToJson(const KillMatrix& matrix) {
  json records = json::array();
  for (const Record& r : ToRecords(matrix)) {
    records.push_back({{"mutant_id", r.mutant_id},
                       {"tool", r.tool},
                       {"test_id", r.test_id},
                       {"killed", r.killed}});
  }
  return json{{"schema_version", 1}, {"records", records}};
}

std::string KillMatrixToCsv(const KillMatrix& matrix) {
  std::string out = "mutant_id,tool,test_id,killed\n";
  for (const Record& r : ToRecords(matrix)) {
    out += CsvField(r.mutant_id) + "," + CsvField(r.tool) + "," +
           CsvField(r.test_id) + "," + (r.killed ? "1" : "0") + "\n";
  }
  return out;
}

KillMatrix KillMatrixFromJson(const json& j) {
  const json* records = &j;
  if (j.is_object()) {
    if (!j.contains("records")) throw SchemaError(0, "missing records array");
    records = &j.at("records");
  }
  if (!records->is_array()) throw SchemaError(0, "records must be an array");
  std::vector<Record> parsed;
  for (std::size_t i = 0; i < records->size(); ++i) {
    const json& r = (*records)[i];
    if (!r.is_object()) throw SchemaError(i, "record is not an object");
    for (const char* key : {"mutant_id", "tool", "test_id"}) {
      if (!r.contains(key) || !r.at(key).is_string()) {
        throw SchemaError(i, std::string("missing string field ") + key);
      }
    }
    if (!r.contains("killed")) throw SchemaError(i, "missing field killed");
    bool killed = false;
    const json& k = r.at("killed");
    if (k.is_boolean()) {
      killed = k.get<bool>();
    } else if (k.is_number_integer()) {
      killed = ParseBool(i, std::to_string(k.get<long long>()));
    } else if (k.is_string()) {
      killed = ParseBool(i, k.get<std::string>());
    } else {
      throw SchemaError(i, "killed must be a boolean");
    }
    parsed.push_back(Record{r.at("mutant_id").get<std::string>(),
                            r.at("tool").get<std::string>(),
                            r.at("test_id").get<std::string>(), killed});
  }
  return FromRecords(parsed);
}

KillMatrix KillMatrixFromCsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Record> parsed;
  bool header = true;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = SplitCsv(index, line);
    if (header) {
      header = false;
      const std::vector<std::string> want = {"mutant_id", "tool", "test_id",
                                             "killed"};
      if (fields != want) {
        throw SchemaError(0, "header must be mutant_id,tool,test_id,killed");
      }
      continue;
    }
    if (fields.size() != 4) {
      throw SchemaError(index, "expected 4 fields, got " +
                                   std::to_string(fields.size()));
    }
    parsed.push_back(
        Record{fields[0], fields[1], fields[2], ParseBool(index, fields[3])});
    ++index;
  }
  if (header) throw SchemaError(0, "empty CSV");
  return FromRecords(parsed);
}

KillMatrix ReadKillMatrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read kill matrix " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  if (std::filesystem::path(path).extension() == ".csv") {
    return KillMatrixFromCsv(ss.str());
  }
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw SchemaError(0, std::string("not JSON: ") + e.what());
  }
  return KillMatrixFromJson(j);
}

void WriteKillMatrix(const KillMatrix& matrix, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  if (std::filesystem::path(path).extension() == ".csv") {
    out << KillMatrixToCsv(matrix);
  } else {
    out << KillMatrixToJson(matrix).dump(1) << "\n";
  }
}

}  // namespace pyfault
