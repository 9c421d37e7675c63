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

#ifndef PYFAULT_SOURCE_LOCATION_H_
#define PYFAULT_SOURCE_LOCATION_H_

#include <compare>
#include <cstddef>
#include <string>

#include "json.hpp"

namespace pyfault {

// Half-open byte range into a file's text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool Contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  auto operator<=>(const Span&) const = default;
};

// Lines are 1-based, columns are 0-based UTF-8 byte offsets within the line.
// This is the convention used by CPython's ast module, so positions emitted by
// an in-interpreter tracer can be consumed without translation.
struct SourceLocation {
  std::string file;  // relative to the project root
  int start_line = 0;
  int start_col = 0;
  int end_line = 0;
  int end_col = 0;

  bool IsWellFormed() const;
  std::string ToString() const;  // "file:1:4-1:9"

  auto operator<=>(const SourceLocation&) const = default;
};

void to_json(nlohmann::json& j, const SourceLocation& loc);
void from_json(const nlohmann::json& j, SourceLocation& loc);

}  // namespace pyfault

#endif  // PYFAULT_SOURCE_LOCATION_H_
