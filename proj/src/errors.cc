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

#include "pyfault/errors.h"

#include <utility>

namespace pyfault {

ParseError::ParseError(int line, int col, const std::string& message)
    : Error("line " + std::to_string(line) + ", column " +
            std::to_string(col) + ": " + message),
      line_(line),
      col_(col),
      detail_(message) {}

SchemaError::SchemaError(std::size_t record_index, const std::string& message)
    : Error("record " + std::to_string(record_index) + ": " + message),
      record_index_(record_index) {}

BaselineRed::BaselineRed(std::vector<std::string> failing_tests,
                         const std::string& why)
    : Error(why), failing_tests_(std::move(failing_tests)) {}

}  // namespace pyfault
