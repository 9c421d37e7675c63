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

#include "pyfault/pipeline.h"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "pyfault/dynamic_scan.h"
#include "pyfault/errors.h"
#include "pyfault/junit.h"
#include "pyfault/process.h"
#include "pyfault/report.h"
#include "pyfault/static_scan.h"

namespace pyfault {
namespace {

namespace fs = std::filesystem;

double Since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string ReadText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

std::string JoinSet(const std::set<std::string>& items, const char* sep) {
  std::string out;
  for (const std::string& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

RunnerConfig MakeRunnerConfig(const Config& config) {
  RunnerConfig rc;
  rc.project_root = config.project_root;
  rc.test_command = config.test_command;
  rc.timeout_factor = config.timeout_factor;
  rc.timeout_min_seconds = config.timeout_min_seconds;
  rc.workers = config.workers;
  rc.run_dir = ResolvedRunDir(config);
  return rc;
}

}  // namespace

RunPaths::RunPaths(const std::string& dir)
    : run_dir(dir),
      trace((fs::path(dir) / "trace.jsonl").string()),
      coverage((fs::path(dir) / "coverage.json").string()),
      candidates((fs::path(dir) / "candidates.jsonl").string()),
      mutants((fs::path(dir) / "mutants").string()),
      kill_matrix((fs::path(dir) / "killmatrix.json").string()),
      report_json((fs::path(dir) / "report.json").string()),
      report_md((fs::path(dir) / "report.md").string()),
      timings((fs::path(dir) / "timings.json").string()),
      graph_dot((fs::path(dir) / "graph.dot").string()),
      graph_json((fs::path(dir) / "graph.json").string()) {}

std::map<std::string, std::string> TraceEnvironment(
    const Config& config, const std::string& trace_root,
    const std::string& trace_out, const std::string& coverage_out) {
  std::map<std::string, std::string> env;
  env["PYFAULT_TRACE_ROOT"] = trace_root;
  env["PYFAULT_TRACE_OUT"] = trace_out;
  env["PYFAULT_COVERAGE_OUT"] = coverage_out;
  env["PYFAULT_ATTR_CAP"] = std::to_string(config.attribute_cap);
  env["PYFAULT_CONVERSIONS"] = JoinSet(config.conversion_functions, ",");
  std::string pythonpath = fs::absolute(config.tracer_path).string();
  if (const char* existing = std::getenv("PYTHONPATH");
      existing != nullptr && *existing != '\0') {
    pythonpath += ":" + std::string(existing);
  }
  env["PYTHONPATH"] = pythonpath;
  return env;
}

void RunTrace(const Config& config, bool force) {
  ValidateConfig(config);
  if (config.tracer_path.empty()) {
    throw ConfigError("missing required key tracer_path");
  }
  const RunPaths paths(ResolvedRunDir(config));
  if (!force && (fs::exists(paths.trace) || fs::exists(paths.coverage))) {
    throw ConfigError("trace artifacts already exist in " + paths.run_dir +
                      "; pass --force to overwrite");
  }
  fs::create_directories(paths.run_dir);
  fs::remove(paths.trace);
  fs::remove(paths.coverage);

  const fs::path work = fs::path(paths.run_dir) / "work";
  const fs::path workspace = work / "trace";
  const fs::path junit = work / "trace-junit.xml";
  CopyProject(config.project_root, workspace.string(), paths.run_dir);
  fs::remove(junit);
  std::map<std::string, std::string> env =
      TraceEnvironment(config, fs::absolute(workspace).string(),
                       fs::absolute(paths.trace).string(),
                       fs::absolute(paths.coverage).string());
  env["PYTHONDONTWRITEBYTECODE"] = "1";
  std::string command = config.test_command;
  const std::string key = "{junit}";
  for (std::size_t at = command.find(key); at != std::string::npos;
       at = command.find(key)) {
    command.replace(at, key.size(), junit.string());
  }
  const ProcessResult run =
      RunShell(command, workspace.string(), env, 0,
               (fs::path(paths.run_dir) / "logs" / "trace.log").string());
  fs::remove_all(workspace);

  std::vector<TestVerdict> verdicts;
  try {
    verdicts = ParseJUnit(junit.string());
  } catch (const Error& e) {
    throw InstrumentationFailure(
        "traced suite produced no test report (exit code " +
        std::to_string(run.exit_code) + "): " + e.what());
  }
  std::vector<std::string> failing;
  for (const TestVerdict& v : verdicts) {
    if (v.verdict == Verdict::kFailed || v.verdict == Verdict::kError) {
      failing.push_back(v.id);
    }
  }
  if (!failing.empty()) {
    std::string why = "suite is red under tracing:";
    for (const std::string& t : failing) why += " " + t;
    throw BaselineRed(failing, why);
  }
  if (!fs::exists(paths.trace) || !fs::exists(paths.coverage)) {
    throw InstrumentationFailure(
        "the tracer did not write " +
        std::string(fs::exists(paths.trace) ? paths.coverage : paths.trace) +
        "; check tracer_path");
  }
}

RunResult Identify(const Config& config, const std::string& trace_path,
                   const std::string& coverage_path,
                   std::map<std::string, SyntaxTree>* trees) {
  const auto start = std::chrono::steady_clock::now();
  RunResult run;
  run.config = config;
  const RunPaths paths(ResolvedRunDir(config));

  for (const std::string& file : DiscoverFiles(config)) {
    try {
      SyntaxTree tree =
          Parse(ReadText((fs::path(config.project_root) / file).string()), file);
      trees->emplace(file, std::move(tree));
      run.files.push_back(file);
    } catch (const ParseError& e) {
      run.unparsed.push_back(UnparsedFile{file, e.what()});
    }
  }

  StaticScanOptions static_options;
  static_options.include_asserts = config.include_asserts;
  for (const auto& [file, tree] : *trees) {
    for (CandidateRecord& c : ScanContainers(tree)) {
      run.candidates.push_back(std::move(c));
    }
    for (CandidateRecord& c : ScanConditions(tree, static_options)) {
      run.candidates.push_back(std::move(c));
    }
  }

  if (!config.static_only) {
    const std::string trace = trace_path.empty() ? paths.trace : trace_path;
    if (!fs::exists(trace)) {
      throw MissingCoverage("no trace at " + trace +
                            "; run `pyfault trace` first or pass --static-only");
    }
    DynamicScanOptions dynamic_options;
    dynamic_options.seed = config.seed;
    dynamic_options.conversion_functions = config.conversion_functions;
    for (CandidateRecord& c :
         ScanDynamic(ReadTrace(trace, &run.trace_stats), dynamic_options)) {
      if (trees->count(c.loc.file)) run.candidates.push_back(std::move(c));
    }
  }
  SortAndDedup(&run.candidates);

  const std::string coverage =
      coverage_path.empty() ? paths.coverage : coverage_path;
  if (config.static_only && !fs::exists(coverage)) {
    run.pruning_skipped = true;
    run.pruned.kept = run.candidates;
  } else {
    const CoverageMap map = ReadCoverage(coverage);
    run.pruned = Prune(run.candidates, &map);
  }
  run.timings.identify = Since(start);
  return run;
}

RunResult RunPipeline(const Config& config, const std::string& trace_path,
                      const std::string& coverage_path) {
  ValidateConfig(config);
  const RunPaths paths(ResolvedRunDir(config));
  fs::create_directories(paths.run_dir);

  std::map<std::string, SyntaxTree> trees;
  RunResult run = Identify(config, trace_path, coverage_path, &trees);
  WriteCandidates(paths.candidates, run.candidates);

  const auto start = std::chrono::steady_clock::now();
  MutationOptions mutation_options;
  mutation_options.seed = config.seed;
  mutation_options.exhaustive_conditions = config.exhaustive_conditions;
  run.batch = GenerateMutants(run.pruned.kept, trees, mutation_options);
  fs::remove_all(paths.mutants);
  fs::create_directories(paths.mutants);
  for (const Mutant& m : run.batch.mutants) {
    WriteText((fs::path(paths.mutants) / (m.id + ".diff")).string(), m.diff);
    WriteText((fs::path(paths.mutants) / (m.id + ".py")).string(),
              m.mutated_text);
  }

  CampaignOptions campaign_options;
  campaign_options.sample_ratio = config.sample_ratio;
  campaign_options.seed = config.seed;
  run.campaign = RunCampaign(run.batch.mutants, run.batch.invalid,
                             MakeRunnerConfig(config), campaign_options);
  run.timings.mutate_and_test = Since(start);

  const auto post = std::chrono::steady_clock::now();
  run.matrix =
      BuildKillMatrix(run.campaign.outcomes, run.campaign.baseline.inventory,
                      "pyfault");
  WriteKillMatrix(run.matrix, paths.kill_matrix);
  run.timings.post_process = Since(post);
  WriteReports(run, paths);
  return run;
}

}  // namespace pyfault
