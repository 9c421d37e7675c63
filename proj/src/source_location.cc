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

#include "pyfault/source_location.h"

#include <string>
#include <tuple>

namespace pyfault {

bool SourceLocation::IsWellFormed() const {
  return !file.empty() && start_line >= 1 && start_col >= 0 && end_col >= 0 &&
         std::tie(start_line, start_col) <= std::tie(end_line, end_col);
}

std::string SourceLocation::ToString() const {
  return file + ":" + std::to_string(start_line) + ":" +
         std::to_string(start_col) + "-" + std::to_string(end_line) + ":" +
         std::to_string(end_col);
}

void to_json(nlohmann::json& j, const SourceLocation& loc) {
  j = nlohmann::json{{"file", loc.file},
                     {"start_line", loc.start_line},
                     {"start_col", loc.start_col},
                     {"end_line", loc.end_line},
                     {"end_col", loc.end_col}};
}

void from_json(const nlohmann::json& j, SourceLocation& loc) {
  j.at("file").get_to(loc.file);
  j.at("start_line").get_to(loc.start_line);
  j.at("start_col").get_to(loc.start_col);
  j.at("end_line").get_to(loc.end_line);
  j.at("end_col").get_to(loc.end_col);
}

}  // namespace pyfault
