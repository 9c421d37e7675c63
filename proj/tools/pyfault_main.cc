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

// pyfault: mutation testing for Python projects.
//
//   pyfault trace   --config pyfault.toml [--force]
//   pyfault run     --config pyfault.toml [--seed N] [--sample R] ...
//   pyfault compare a.json b.json [--out DIR]

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "pyfault/analytics.h"
#include "pyfault/config.h"
#include "pyfault/errors.h"
#include "pyfault/kill_matrix.h"
#include "pyfault/pipeline.h"
#include "pyfault/report.h"

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBaselineRed = 2;
constexpr int kExitInternal = 3;

struct CommonFlags {
  std::string config_path;
  std::string project;
  std::string run_dir;
};

struct RunFlags {
  std::optional<std::uint64_t> seed;
  std::optional<double> sample;
  std::optional<int> workers;
  std::optional<double> timeout_factor;
  bool static_only = false;
  bool exhaustive_conditions = false;
  bool include_asserts = false;
  std::string trace;
  std::string coverage;
};

void AddCommon(CLI::App* app, CommonFlags* flags) {
  app->add_option("--config", flags->config_path,
                  "Config file (default: <project>/pyfault.toml)");
  app->add_option("--project", flags->project, "Project root");
  app->add_option("--run-dir", flags->run_dir,
                  "Run directory (default: <project>/.pyfault)");
}

pyfault::Config LoadFor(const CommonFlags& flags) {
  std::string path = flags.config_path;
  if (path.empty()) {
    const fs::path guess =
        fs::path(flags.project.empty() ? "." : flags.project) / "pyfault.toml";
    if (fs::exists(guess)) path = guess.string();
  }
  pyfault::Config config;
  if (!path.empty()) {
    config = pyfault::LoadConfig(path);
  } else {
    config = pyfault::ParseConfig("", "<defaults>");
  }
  if (!flags.project.empty()) config.project_root = flags.project;
  if (!flags.run_dir.empty()) config.run_dir = flags.run_dir;
  return config;
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw pyfault::Error("cannot write " + path.string());
  out << text;
}

int Trace(const CommonFlags& common, bool force) {
  const pyfault::Config config = LoadFor(common);
  pyfault::RunTrace(config, force);
  const pyfault::RunPaths paths(pyfault::ResolvedRunDir(config));
  std::cout << "wrote " << paths.trace << " and " << paths.coverage << "\n";
  return kExitOk;
}

int Run(const CommonFlags& common, const RunFlags& flags) {
  pyfault::Config config = LoadFor(common);
  if (flags.seed) config.seed = *flags.seed;
  if (flags.sample) config.sample_ratio = *flags.sample;
  if (flags.workers) config.workers = *flags.workers;
  if (flags.timeout_factor) config.timeout_factor = *flags.timeout_factor;
  if (flags.static_only) config.static_only = true;
  if (flags.exhaustive_conditions) config.exhaustive_conditions = true;
  if (flags.include_asserts) config.include_asserts = true;
  const pyfault::RunResult run =
      pyfault::RunPipeline(config, flags.trace, flags.coverage);
  const pyfault::RunPaths paths(pyfault::ResolvedRunDir(config));
  std::cout << "mutation score "
            << pyfault::FormatScore(pyfault::MutationScore(run.campaign.outcomes))
            << " over " << run.campaign.outcomes.size() << " mutants; report in "
            << paths.report_md << "\n";
  return kExitOk;
}

int Compare(const std::string& a_path, const std::string& b_path,
            const std::string& out_dir, bool require_shared_tests) {
  const pyfault::KillMatrix a = pyfault::ReadKillMatrix(a_path);
  const pyfault::KillMatrix b = pyfault::ReadKillMatrix(b_path);
  const pyfault::Comparison c = pyfault::Compare(a, b, require_shared_tests);
  fs::create_directories(out_dir);
  WriteFile(fs::path(out_dir) / "comparison.json",
            pyfault::ComparisonToJson(c).dump(1) + "\n");
  WriteFile(fs::path(out_dir) / "comparison.md",
            pyfault::ComparisonToMarkdown(c));
  WriteFile(fs::path(out_dir) / "graph.json",
            pyfault::GraphToJson(c.graph).dump(1) + "\n");
  WriteFile(fs::path(out_dir) / "graph.dot", pyfault::GraphToDot(c.graph));
  std::cout << pyfault::ComparisonToMarkdown(c);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pyfault: mutation testing for Python projects"};
  app.require_subcommand(1);

  CommonFlags trace_common;
  bool force = false;
  CLI::App* trace = app.add_subcommand("trace", "Run the suite under the tracer");
  AddCommon(trace, &trace_common);
  trace->add_flag("--force", force, "Overwrite existing trace artifacts");

  CommonFlags run_common;
  RunFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "Scan, mutate and test");
  AddCommon(run, &run_common);
  run->add_option("--seed", run_flags.seed, "RNG seed");
  run->add_option("--sample", run_flags.sample, "Fraction of mutants to run")
      ->check(CLI::Range(0.0, 1.0));
  run->add_option("--workers", run_flags.workers, "Parallel workspaces")
      ->check(CLI::PositiveNumber);
  run->add_option("--timeout-factor", run_flags.timeout_factor,
                  "Per-mutant timeout as a multiple of the baseline duration");
  run->add_flag("--static-only", run_flags.static_only,
                "Only RemElCont and RemExpCond; no trace needed");
  run->add_flag("--exhaustive-conditions", run_flags.exhaustive_conditions,
                "One RemExpCond mutant per operand");
  run->add_flag("--include-asserts", run_flags.include_asserts,
                "Scan conditions inside assert statements");
  run->add_option("--trace", run_flags.trace, "Trace file to use");
  run->add_option("--coverage", run_flags.coverage, "Coverage file to use");

  std::string matrix_a, matrix_b, out_dir = "comparison";
  bool strict_universe = false;
  CLI::App* compare = app.add_subcommand("compare", "Compare two kill matrices");
  compare->add_option("matrix_a", matrix_a, "First kill matrix (JSON or CSV)")
      ->required();
  compare->add_option("matrix_b", matrix_b, "Second kill matrix (JSON or CSV)")
      ->required();
  compare->add_option("--out", out_dir, "Output directory");
  compare->add_flag("--strict-universe", strict_universe,
                    "Fail when the matrices share no tests");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (trace->parsed()) return Trace(trace_common, force);
    if (run->parsed()) return Run(run_common, run_flags);
    return Compare(matrix_a, matrix_b, out_dir, strict_universe);
  } catch (const pyfault::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pyfault::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pyfault::MissingCoverage& e) {
    std::cerr << "missing input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pyfault::EmptyUniverse& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const pyfault::BaselineRed& e) {
    std::cerr << "baseline red: " << e.what() << "\n";
    return kExitBaselineRed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
