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

#ifndef PYFAULT_RUNNER_H_
#define PYFAULT_RUNNER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pyfault/junit.h"
#include "pyfault/mutator.h"

namespace pyfault {

enum class MutantStatus { kKilled, kSurvived, kInvalidSyntactic, kInvalidRuntime };

std::string_view StatusName(MutantStatus status);
// Throws std::invalid_argument for an unknown name.
MutantStatus StatusFromName(std::string_view name);

// Pseudo-test credited with the kill when a mutant exceeds its time budget.
inline constexpr std::string_view kTimeoutTest = "<timeout>";

struct MutantOutcome {
  std::string mutant_id;
  MutantStatus status = MutantStatus::kSurvived;
  std::set<std::string> killing_tests;
  double duration = 0;
  bool timed_out = false;
  std::string failure_signature;  // empty unless invalid
};

struct RunnerConfig {
  std::string project_root;
  // Shell command run in the workspace root. "{junit}" expands to the path
  // the JUnit report must be written to.
  std::string test_command;
  double timeout_factor = 5;
  double timeout_min_seconds = 10;
  int workers = 1;
  std::string run_dir;  // scratch workspaces and logs/
  std::map<std::string, std::string> env;
};

struct Baseline {
  std::vector<std::string> inventory;  // sorted; skipped tests left out
  double seconds = 0;
};

// Copies the project into `dest`, leaving out VCS metadata, bytecode caches
// and the run directory.
void CopyProject(const std::string& project_root, const std::string& dest,
                 const std::string& run_dir);

// Runs the unmutated suite. Throws BaselineRed when any test fails or no
// test runs.
Baseline BaselineCheck(const RunnerConfig& config);

double MutantTimeout(const RunnerConfig& config, const Baseline& baseline);

// Classifies one suite execution against the baseline inventory.
// `report` is null when no JUnit report was produced.
MutantOutcome ClassifyRun(const std::string& mutant_id,
                          const std::vector<std::string>& inventory,
                          bool timed_out,
                          const std::vector<TestVerdict>* report);

// Evaluates one mutant in an existing workspace copy and restores the
// patched file afterwards.
MutantOutcome Evaluate(const Mutant& mutant, const Baseline& baseline,
                       const RunnerConfig& config, const std::string& workspace,
                       const std::string& junit_path);

struct CampaignOptions {
  double sample_ratio = 1.0;
  std::uint64_t seed = 0;
  // Evaluation order is shuffled with this seed when set. Results do not
  // depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

struct CampaignResult {
  Baseline baseline;
  std::vector<MutantOutcome> outcomes;  // sorted by mutant id
  std::vector<std::string> unsampled;   // valid mutants left out, sorted
};

// Ids of the mutants kept by a seeded sample at `ratio`, sorted.
std::vector<std::string> SampleMutants(const std::vector<Mutant>& mutants,
                                       double ratio, std::uint64_t seed);

// Runs the baseline, then every sampled mutant on a pool of
// `config.workers` workspaces. Syntactically invalid mutants get outcomes
// without being run.
CampaignResult RunCampaign(const std::vector<Mutant>& mutants,
                           const std::vector<InvalidMutant>& invalid,
                           const RunnerConfig& config,
                           const CampaignOptions& options);

// killed / (killed + survived); nullopt when nothing valid was run.
std::optional<double> MutationScore(const std::vector<MutantOutcome>& outcomes);

// Durations are written only when `with_timing` is set.
nlohmann::json OutcomeToJson(const MutantOutcome& outcome, bool with_timing);
MutantOutcome OutcomeFromJson(const nlohmann::json& j);

}  // namespace pyfault

#endif  // PYFAULT_RUNNER_H_
