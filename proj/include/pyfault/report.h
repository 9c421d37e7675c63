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

#ifndef PYFAULT_REPORT_H_
#define PYFAULT_REPORT_H_

#include <optional>
#include <string>

#include "json.hpp"
#include "pyfault/analytics.h"
#include "pyfault/pipeline.h"

namespace pyfault {

// "NA" when undefined, otherwise the score as a percentage with two
// decimals.
std::string FormatScore(const std::optional<double>& score);

// Machine report. Holds no timings or absolute paths, so equal inputs give
// byte-equal dumps.
nlohmann::json ReportToJson(const RunResult& run);
std::string ReportToMarkdown(const RunResult& run);
nlohmann::json TimingsToJson(const PhaseTimings& timings);

// Writes report.json, report.md and timings.json.
void WriteReports(const RunResult& run, const RunPaths& paths);

// Comparison report for `compare`.
std::string ComparisonToMarkdown(const Comparison& comparison);

}  // namespace pyfault

#endif  // PYFAULT_REPORT_H_
