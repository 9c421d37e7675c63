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

#ifndef PYFAULT_PIPELINE_H_
#define PYFAULT_PIPELINE_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pyfault/candidate.h"
#include "pyfault/config.h"
#include "pyfault/coverage.h"
#include "pyfault/kill_matrix.h"
#include "pyfault/mutator.h"
#include "pyfault/runner.h"
#include "pyfault/trace.h"

namespace pyfault {

inline constexpr int kRunSchemaVersion = 1;

struct PhaseTimings {
  double identify = 0;
  double mutate_and_test = 0;
  double post_process = 0;
};

struct UnparsedFile {
  std::string file;
  std::string error;
};

struct RunResult {
  Config config;
  std::vector<std::string> files;  // parsed and scanned
  std::vector<UnparsedFile> unparsed;
  std::vector<CandidateRecord> candidates;  // everything discovered
  bool pruning_skipped = false;
  PruneResult pruned;
  TraceReadStats trace_stats;
  MutationBatch batch;
  CampaignResult campaign;
  KillMatrix matrix;
  PhaseTimings timings;
};

// Paths of the run directory's artifacts.
struct RunPaths {
  explicit RunPaths(const std::string& run_dir);
  std::string run_dir;
  std::string trace;
  std::string coverage;
  std::string candidates;
  std::string mutants;
  std::string kill_matrix;
  std::string report_json;
  std::string report_md;
  std::string timings;
  std::string graph_dot;
  std::string graph_json;
};

// Environment handed to the test command while tracing. The tracer
// activates when PYFAULT_TRACE_OUT is set.
std::map<std::string, std::string> TraceEnvironment(
    const Config& config, const std::string& trace_root,
    const std::string& trace_out, const std::string& coverage_out);

// Runs the suite once under the tracer and leaves trace.jsonl and
// coverage.json in the run directory. Existing artifacts are kept unless
// `force` is set.
void RunTrace(const Config& config, bool force);

// Scan, prune, mutate and test. `trace_path` and `coverage_path` override
// the run directory's artifacts when non-empty. Artifacts are written as
// each phase completes, so an abort leaves the earlier ones in place.
RunResult RunPipeline(const Config& config, const std::string& trace_path,
                      const std::string& coverage_path);

// The discovery half of RunPipeline: parse, scan, prune.
RunResult Identify(const Config& config, const std::string& trace_path,
                   const std::string& coverage_path,
                   std::map<std::string, SyntaxTree>* trees);

}  // namespace pyfault

#endif  // PYFAULT_PIPELINE_H_
