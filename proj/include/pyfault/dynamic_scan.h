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

#ifndef PYFAULT_DYNAMIC_SCAN_H_
#define PYFAULT_DYNAMIC_SCAN_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "pyfault/candidate.h"
#include "pyfault/trace.h"

namespace pyfault {

// Built-in conversions recognized by default.
const std::set<std::string>& DefaultConversionFunctions();

struct DynamicScanOptions {
  std::uint64_t seed = 0;
  std::set<std::string> conversion_functions = DefaultConversionFunctions();
};

// Each derivation folds over all events, ignores kinds it does not handle,
// and returns canonically ordered, deduplicated records.
std::vector<CandidateRecord> DeriveRemFuncArg(
    const std::vector<TraceEvent>& events);
std::vector<CandidateRecord> DeriveRemConvFunc(
    const std::vector<TraceEvent>& events,
    const std::set<std::string>& conversion_functions);
std::vector<CandidateRecord> DeriveAttributeOps(
    const std::vector<TraceEvent>& events, std::uint64_t seed);
std::vector<CandidateRecord> DeriveRemMetCall(
    const std::vector<TraceEvent>& events);

std::vector<CandidateRecord> ScanDynamic(const std::vector<TraceEvent>& events,
                                         const DynamicScanOptions& options);

}  // namespace pyfault

#endif  // PYFAULT_DYNAMIC_SCAN_H_
