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

#include "pyfault/runner.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pyfault/errors.h"
#include "pyfault/hashing.h"
#include "pyfault/junit.h"
#include "pyfault/process.h"

namespace pyfault {
namespace fs = std::filesystem;

std::string_view StatusName(MutantStatus status) {
  switch (status) {
    case MutantStatus::kKilled: return "killed";
    case MutantStatus::kSurvived: return "survived";
    case MutantStatus::kInvalidSyntactic: return "invalid_syntactic";
    case MutantStatus::kInvalidRuntime: return "invalid_runtime";
  }
  return "?";
}

MutantStatus StatusFromName(std::string_view name) {
  for (MutantStatus s :
       {MutantStatus::kKilled, MutantStatus::kSurvived,
        MutantStatus::kInvalidSyntactic, MutantStatus::kInvalidRuntime}) {
    if (StatusName(s) == name) return s;
  }
  throw std::invalid_argument("unknown mutant status " + std::string(name));
}

namespace {

bool Excluded(const fs::path& path, const fs::path& run_dir) {
  const std::string name = path.filename().string();
  if (name == ".git" || name == "__pycache__" || name == ".pytest_cache") {
    return true;
  }
  std::error_code ec;
  return !run_dir.empty() && fs::equivalent(path, run_dir, ec);
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

std::string ExpandCommand(std::string command, const std::string& junit) {
  const std::string key = "{junit}";
  for (std::size_t at = command.find(key); at != std::string::npos;
       at = command.find(key, at + junit.size())) {
    command.replace(at, key.size(), junit);
  }
  return command;
}

std::map<std::string, std::string> RunEnv(const RunnerConfig& config) {
  std::map<std::string, std::string> env = config.env;
  env["PYTHONDONTWRITEBYTECODE"] = "1";
  return env;
}

fs::path WorkDir(const RunnerConfig& config) {
  return fs::path(config.run_dir) / "work";
}

}  // namespace

void CopyProject(const std::string& project_root, const std::string& dest,
                 const std::string& run_dir) {
  const fs::path root = fs::absolute(project_root);
  const fs::path skip = run_dir.empty() ? fs::path() : fs::absolute(run_dir);
  fs::remove_all(dest);
  fs::create_directories(dest);
  for (auto it = fs::recursive_directory_iterator(root);
       it != fs::recursive_directory_iterator(); ++it) {
    if (Excluded(it->path(), skip)) {
      if (it->is_directory()) it.disable_recursion_pending();
      continue;
    }
    const fs::path target = fs::path(dest) / fs::relative(it->path(), root);
    if (it->is_directory()) {
      fs::create_directories(target);
    } else if (it->is_regular_file()) {
      fs::copy_file(it->path(), target, fs::copy_options::overwrite_existing);
    }
  }
}

Baseline BaselineCheck(const RunnerConfig& config) {
  const fs::path work = WorkDir(config);
  const fs::path workspace = work / "baseline";
  const fs::path junit = work / "baseline-junit.xml";
  CopyProject(config.project_root, workspace.string(), config.run_dir);
  fs::remove(junit);
  const ProcessResult run = RunShell(
      ExpandCommand(config.test_command, junit.string()), workspace.string(),
      RunEnv(config), 0,
      (fs::path(config.run_dir) / "logs" / "baseline.log").string());
  fs::remove_all(workspace);
  std::vector<TestVerdict> verdicts;
  try {
    verdicts = ParseJUnit(junit.string());
  } catch (const Error& e) {
    throw BaselineRed({}, "baseline produced no test report (exit code " +
                              std::to_string(run.exit_code) + "): " + e.what());
  }
  Baseline baseline;
  baseline.seconds = run.seconds;
  std::vector<std::string> failing;
  for (const TestVerdict& v : verdicts) {
    if (v.verdict == Verdict::kFailed || v.verdict == Verdict::kError) {
      failing.push_back(v.id);
    } else if (v.verdict == Verdict::kPassed) {
      baseline.inventory.push_back(v.id);
    }
  }
  std::sort(failing.begin(), failing.end());
  if (!failing.empty()) {
    std::string why = "baseline is red:";
    for (const std::string& t : failing) why += " " + t;
    throw BaselineRed(failing, why);
  }
  if (baseline.inventory.empty()) {
    throw BaselineRed({}, "baseline ran no tests");
  }
  std::sort(baseline.inventory.begin(), baseline.inventory.end());
  baseline.inventory.erase(
      std::unique(baseline.inventory.begin(), baseline.inventory.end()),
      baseline.inventory.end());
  return baseline;
}

double MutantTimeout(const RunnerConfig& config, const Baseline& baseline) {
  return std::max(config.timeout_min_seconds,
                  config.timeout_factor * baseline.seconds);
}

MutantOutcome ClassifyRun(const std::string& mutant_id,
                          const std::vector<std::string>& inventory,
                          bool timed_out,
                          const std::vector<TestVerdict>* report) {
  MutantOutcome out;
  out.mutant_id = mutant_id;
  if (timed_out) {
    out.status = MutantStatus::kKilled;
    out.timed_out = true;
    out.killing_tests.insert(std::string(kTimeoutTest));
    return out;
  }
  if (report == nullptr) {
    out.status = MutantStatus::kInvalidRuntime;
    out.failure_signature = "NoReport";
    return out;
  }
  std::map<std::string, Verdict> verdicts;
  for (const TestVerdict& v : *report) {
    auto [it, fresh] = verdicts.emplace(v.id, v.verdict);
    if (!fresh && (v.verdict == Verdict::kFailed || v.verdict == Verdict::kError)) {
      it->second = v.verdict;
    }
  }
  bool any_ran = false;
  for (const std::string& test : inventory) {
    const auto it = verdicts.find(test);
    if (it == verdicts.end()) {
      // Tests that vanish from the report were broken by the mutant.
      out.killing_tests.insert(test);
      continue;
    }
    any_ran = true;
    if (it->second == Verdict::kFailed || it->second == Verdict::kError) {
      out.killing_tests.insert(test);
    }
  }
  if (!any_ran) {
    out.status = MutantStatus::kInvalidRuntime;
    out.failure_signature = "CollectionError";
    out.killing_tests.clear();
    return out;
  }
  out.status = out.killing_tests.empty() ? MutantStatus::kSurvived
                                         : MutantStatus::kKilled;
  return out;
}

MutantOutcome Evaluate(const Mutant& mutant, const Baseline& baseline,
                       const RunnerConfig& config, const std::string& workspace,
                       const std::string& junit_path) {
  const fs::path file = fs::path(workspace) / mutant.candidate.loc.file;
  const std::string original = ReadFile(file);
  WriteFile(file, mutant.mutated_text);
  fs::remove(junit_path);
  ProcessResult run;
  try {
    run = RunShell(ExpandCommand(config.test_command, junit_path), workspace,
                   RunEnv(config), MutantTimeout(config, baseline),
                   (fs::path(config.run_dir) / "logs" / (mutant.id + ".log"))
                       .string());
  } catch (...) {
    WriteFile(file, original);
    throw;
  }
  WriteFile(file, original);

  MutantOutcome out;
  if (run.timed_out) {
    out = ClassifyRun(mutant.id, baseline.inventory, true, nullptr);
  } else {
    std::optional<std::vector<TestVerdict>> report;
    try {
      report = ParseJUnit(junit_path);
    } catch (const Error&) {
    }
    out = ClassifyRun(mutant.id, baseline.inventory, false,
                      report ? &*report : nullptr);
  }
  out.duration = run.seconds;
  return out;
}

std::vector<std::string> SampleMutants(const std::vector<Mutant>& mutants,
                                       double ratio, std::uint64_t seed) {
  std::vector<std::pair<std::uint64_t, std::string>> ranked;
  for (const Mutant& m : mutants) {
    ranked.emplace_back(MixSeed(seed, Fnv1a64(m.id)), m.id);
  }
  std::sort(ranked.begin(), ranked.end());
  ratio = std::clamp(ratio, 0.0, 1.0);
  const auto keep = static_cast<std::size_t>(
      std::llround(ratio * static_cast<double>(ranked.size())));
  std::vector<std::string> out;
  for (std::size_t i = 0; i < keep; ++i) out.push_back(ranked[i].second);
  std::sort(out.begin(), out.end());
  return out;
}

CampaignResult RunCampaign(const std::vector<Mutant>& mutants,
                           const std::vector<InvalidMutant>& invalid,
                           const RunnerConfig& config,
                           const CampaignOptions& options) {
  CampaignResult result;
  result.baseline = BaselineCheck(config);

  const std::vector<std::string> sampled =
      SampleMutants(mutants, options.sample_ratio, options.seed);
  const std::set<std::string> keep(sampled.begin(), sampled.end());
  std::vector<const Mutant*> queue;
  for (const Mutant& m : mutants) {
    if (keep.count(m.id)) {
      queue.push_back(&m);
    } else {
      result.unsampled.push_back(m.id);
    }
  }
  if (options.shuffle_seed) {
    std::mt19937_64 engine(*options.shuffle_seed);
    std::shuffle(queue.begin(), queue.end(), engine);
  }

  std::vector<MutantOutcome> outcomes(queue.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mu;
  std::exception_ptr error;
  const int workers = std::max(1, std::min<int>(config.workers,
                                                static_cast<int>(queue.size())));
  auto work = [&](int worker) {
    try {
      const fs::path dir = WorkDir(config) / ("w" + std::to_string(worker));
      const std::string workspace = (dir / "project").string();
      const std::string junit = (dir / "junit.xml").string();
      CopyProject(config.project_root, workspace, config.run_dir);
      for (std::size_t i = next++; i < queue.size(); i = next++) {
        outcomes[i] = Evaluate(*queue[i], result.baseline, config, workspace,
                               junit);
      }
      fs::remove_all(dir);
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mu);
      if (!error) error = std::current_exception();
      next = queue.size();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);

  for (const InvalidMutant& m : invalid) {
    MutantOutcome out;
    out.mutant_id = m.id;
    out.status = MutantStatus::kInvalidSyntactic;
    out.failure_signature = m.failure_signature;
    outcomes.push_back(std::move(out));
  }
  std::sort(outcomes.begin(), outcomes.end(),
            [](const MutantOutcome& a, const MutantOutcome& b) {
              return a.mutant_id < b.mutant_id;
            });
  result.outcomes = std::move(outcomes);
  return result;
}

std::optional<double> MutationScore(const std::vector<MutantOutcome>& outcomes) {
  std::size_t killed = 0;
  std::size_t survived = 0;
  for (const MutantOutcome& o : outcomes) {
    if (o.status == MutantStatus::kKilled) ++killed;
    if (o.status == MutantStatus::kSurvived) ++survived;
  }
  if (killed + survived == 0) return std::nullopt;
  return static_cast<double>(killed) / static_cast<double>(killed + survived);
}

nlohmann::json OutcomeToJson(const MutantOutcome& outcome, bool with_timing) {
  nlohmann::json j = {
      {"mutant_id", outcome.mutant_id},
      {"status", StatusName(outcome.status)},
      {"killing_tests", outcome.killing_tests},
      {"timed_out", outcome.timed_out},
      {"failure_signature", outcome.failure_signature},
  };
  if (with_timing) j["duration"] = outcome.duration;
  return j;
}

MutantOutcome OutcomeFromJson(const nlohmann::json& j) {
  MutantOutcome o;
  o.mutant_id = j.at("mutant_id").get<std::string>();
  o.status = StatusFromName(j.at("status").get<std::string>());
  for (const auto& t : j.at("killing_tests")) {
    o.killing_tests.insert(t.get<std::string>());
  }
  o.timed_out = j.value("timed_out", false);
  o.failure_signature = j.value("failure_signature", "");
  o.duration = j.value("duration", 0.0);
  return o;
}

}  // namespace pyfault
