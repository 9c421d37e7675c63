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

#ifndef PYFAULT_JUNIT_H_
#define PYFAULT_JUNIT_H_

#include <string>
#include <vector>

namespace pyfault {

enum class Verdict { kPassed, kFailed, kError, kSkipped };

struct TestVerdict {
  std::string id;  // "<classname>::<name>", or the name alone without a class
  Verdict verdict = Verdict::kPassed;
  std::string message;
};

// Parses a JUnit-style XML report into per-testcase verdicts in document
// order. Throws Error when the file is missing or is not a JUnit report.
std::vector<TestVerdict> ParseJUnit(const std::string& path);
std::vector<TestVerdict> ParseJUnitText(const std::string& xml);

}  // namespace pyfault

#endif  // PYFAULT_JUNIT_H_
