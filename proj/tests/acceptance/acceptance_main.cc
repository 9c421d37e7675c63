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

// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exits non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "common/brute_force.h"
#include "common/test_support.h"
#include "json.hpp"
#include "pyfault/analytics.h"
#include "pyfault/config.h"
#include "pyfault/dynamic_scan.h"
#include "pyfault/errors.h"
#include "pyfault/kill_matrix.h"
#include "pyfault/mutator.h"
#include "pyfault/pipeline.h"
#include "pyfault/process.h"
#include "pyfault/report.h"
#include "pyfault/runner.h"
#include "pyfault/static_scan.h"
#include "pyfault/trace.h"

namespace pyfault {
namespace {

namespace fs = std::filesystem;
using ::nlohmann::json;
using ::pyfault::testing::FixturePath;
using ::pyfault::testing::ReadFileOrDie;
using ::pyfault::testing::TempDir;

// Collects failed checks for one criterion.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  int checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  int checks_ = 0;
  std::vector<std::string> failures_;
};

std::string Squash(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

SourceLocation LocOf(const SyntaxTree& tree, const std::string& needle) {
  const std::size_t at = tree.text().find(needle);
  if (at == std::string::npos) throw Error("snippet lacks " + needle);
  return tree.ToLocation(Span{at, at + needle.size()});
}

std::string Apply(const std::string& source, Operator op,
                  const std::string& site, Metadata meta,
                  MutationChoice choice = {}) {
  const SyntaxTree tree = Parse(source, "m.py");
  const CandidateRecord c{op, LocOf(tree, site), std::move(meta)};
  return Mutate(c, tree, choice).mutated_text;
}

MutationChoice Element(int i) {
  MutationChoice c;
  c.element_index = i;
  return c;
}

MutationChoice Operand(int i) {
  MutationChoice c;
  c.operand_index = i;
  return c;
}

RemFuncArgMeta Arg(int index, std::optional<std::string> name,
                   const std::string& callee) {
  return RemFuncArgMeta{index, std::move(name), "explicit_default", callee};
}

struct Case {
  std::string name;
  std::string source;
  std::string expected;
  std::function<std::string(const std::string&)> apply;
};

void RunCases(const std::vector<Case>& cases, bool squash, Checker* check) {
  for (const Case& c : cases) {
    std::string got;
    try {
      got = c.apply(c.source);
    } catch (const std::exception& e) {
      check->Expect(false, c.name + " threw " + e.what());
      continue;
    }
    const bool same = squash ? Squash(got) == Squash(c.expected)
                             : got == c.expected;
    check->Expect(same, c.name + " gave: " + got);
  }
}

// 1. Operator shapes from the operator table.
void OperatorFidelity(Checker* check) {
  RunCases(
      {
          {"RemFuncArg", "func(a1, a2, an=vn)\n", "func(a1, a2)\n",
           [](const std::string& s) {
             return Apply(s, Operator::kRemFuncArg, "func(a1, a2, an=vn)",
                          Arg(2, "an", "func"));
           }},
          {"RemConvFunc", "y = conv_func(x)\n", "y = x\n",
           [](const std::string& s) {
             return Apply(s, Operator::kRemConvFunc, "conv_func(x)",
                          RemConvFuncMeta{"conv_func", {"T"}});
           }},
          {"RemElCont", "c = [e1, e2, e3, e4]\n", "c = [e1, e2, e4]\n",
           [](const std::string& s) {
             return Apply(s, Operator::kRemElCont, "[e1, e2, e3, e4]",
                          RemElContMeta{"list", 4, {}}, Element(2));
           }},
          {"RemExpCond", "if cond1 and cond2:\n    pass\n",
           "if cond1:\n    pass\n",
           [](const std::string& s) {
             const SyntaxTree tree = Parse(s, "m.py");
             CandidateRecord c = ScanConditions(tree, {}).at(0);
             return Mutate(c, tree, Operand(1)).mutated_text;
           }},
          {"ChUsedAttr", "v = obj.attr\n", "v = obj.other_attr\n",
           [](const std::string& s) {
             return Apply(s, Operator::kChUsedAttr, "obj.attr",
                          ChUsedAttrMeta{"attr", "other_attr"});
           }},
          {"RemAttrAcc", "v = obj.attr\n", "v = obj\n",
           [](const std::string& s) {
             return Apply(s, Operator::kRemAttrAcc, "obj.attr",
                          RemAttrAccMeta{"attr"});
           }},
          {"RemMetCall", "v = obj.method()\n", "v = obj\n",
           [](const std::string& s) {
             return Apply(s, Operator::kRemMetCall, "obj.method()",
                          RemMetCallMeta{"method"});
           }},
      },
      true, check);
}

// 2. Known fixes undone on small extracted snippets.
void FixReversal(Checker* check) {
  RunCases(
      {
          {"encoding argument",
           "with open(vocab_file, 'r', encoding='utf-8') as f:\n"
           "    data = f.read()\n",
           "with open(vocab_file, 'r') as f:\n    data = f.read()\n",
           [](const std::string& s) {
             return Apply(s, Operator::kRemFuncArg,
                          "open(vocab_file, 'r', encoding='utf-8')",
                          Arg(2, "encoding", "open"));
           }},
          {"dict conversion",
           "json_body = {'attributes': dict(state.attributes)}\n",
           "json_body = {'attributes': state.attributes}\n",
           [](const std::string& s) {
             return Apply(s, Operator::kRemConvFunc, "dict(state.attributes)",
                          RemConvFuncMeta{"dict", {"mappingproxy"}});
           }},
          {"checksum guard",
           "if checksum and checksum == remote_file_checksum:\n"
           "    skip = True\n",
           "if checksum == remote_file_checksum:\n    skip = True\n",
           [](const std::string& s) {
             const SyntaxTree tree = Parse(s, "m.py");
             CandidateRecord c = ScanConditions(tree, {}).at(0);
             return Mutate(c, tree, Operand(0)).mutated_text;
           }},
          {"public() call",
           "versions = project.versions.public()\n",
           "versions = project.versions\n",
           [](const std::string& s) {
             return Apply(s, Operator::kRemMetCall,
                          "project.versions.public()",
                          RemMetCallMeta{"public"});
           }},
          {"RandomState name",
           "if isinstance(random_state, np.random.RandomState):\n"
           "    pass\n",
           "if isinstance(random_state, np.random.randomState):\n"
           "    pass\n",
           [](const std::string& s) {
             return Apply(s, Operator::kChUsedAttr, "np.random.RandomState",
                          ChUsedAttrMeta{"RandomState", "randomState"});
           }},
          {"history_model hop",
           "domain = self.history_model.get_domain()\n",
           "domain = self.get_domain()\n",
           [](const std::string& s) {
             return Apply(s, Operator::kRemAttrAcc, "self.history_model",
                          RemAttrAccMeta{"history_model"});
           }},
          {"unpacking target",
           "src, dst, _ = self.get_edges()\n",
           "src, dst = self.get_edges()\n",
           [](const std::string& s) {
             return Apply(s, Operator::kRemElCont, "src, dst, _",
                          RemElContMeta{"tuple", 3, {}}, Element(2));
           }},
      },
      false, check);
}

// 3. Static scan against the hand-annotated corpus and the ast oracle.
void StaticCompleteness(Checker* check) {
  const std::string text =
      ReadFileOrDie(FixturePath("static/scan_corpus.py"));
  int hand_containers = 0;
  int hand_conditions = 0;
  const std::regex annotation(R"(# expect: containers=(\d+) conditions=(\d+))");
  for (std::sregex_iterator it(text.begin(), text.end(), annotation), end;
       it != end; ++it) {
    hand_containers += std::stoi((*it)[1]);
    hand_conditions += std::stoi((*it)[2]);
  }
  const json oracle = json::parse(
      ReadFileOrDie(FixturePath("static/scan_corpus.expected.json")));
  const SyntaxTree tree = Parse(text, "scan_corpus.py");
  const int containers = static_cast<int>(ScanContainers(tree).size());
  const int conditions = static_cast<int>(ScanConditions(tree, {}).size());
  check->Expect(oracle["lines"].get<int>() >= 300, "corpus under 300 lines");
  check->Expect(hand_containers == oracle["containers"].get<int>() &&
                    hand_conditions == oracle["conditions"].get<int>(),
                "hand counts disagree with the ast oracle");
  check->Expect(containers == hand_containers,
                "containers " + std::to_string(containers) + " != " +
                    std::to_string(hand_containers));
  check->Expect(conditions == hand_conditions,
                "conditions " + std::to_string(conditions) + " != " +
                    std::to_string(hand_conditions));
  check->Expect(containers + conditions == hand_containers + hand_conditions,
                "total");
}

// Per-site facts from one dynamic scan of the shop fixture.
struct DynamicFacts {
  std::map<std::string, int> func_arg_reasons;
  std::map<std::string, int> conv_by_function;
  bool rate_removable = false;
  bool rate_changeable = false;
  std::size_t total = 0;
};

DynamicFacts ScanFacts(const std::vector<CandidateRecord>& found) {
  DynamicFacts f;
  f.total = found.size();
  for (const CandidateRecord& c : found) {
    if (const auto* m = std::get_if<RemFuncArgMeta>(&c.metadata)) {
      ++f.func_arg_reasons[m->reason];
    } else if (const auto* m = std::get_if<RemConvFuncMeta>(&c.metadata)) {
      ++f.conv_by_function[m->function];
    } else if (const auto* m = std::get_if<RemAttrAccMeta>(&c.metadata)) {
      f.rate_removable |= m->attribute == "rate";
    } else if (const auto* m = std::get_if<ChUsedAttrMeta>(&c.metadata)) {
      f.rate_changeable |= m->attribute == "rate";
    }
  }
  return f;
}

// 4. Dynamic heuristics on a freshly traced run of the shop fixture.
void DynamicHeuristics(Checker* check) {
  TempDir dir;
  CopyProject(FixturePath("shop"), dir.Sub("shop"), dir.Sub("none"));
  const ProcessResult traced = RunShell(
      "python3 " + std::string(PYFAULT_ORACLES) +
          "/record_fixture_trace.py . shop " + dir.Sub("trace.jsonl") + " " +
          dir.Sub("coverage.json"),
      dir.Sub("shop"), {{"PYTHONDONTWRITEBYTECODE", "1"}}, 25, "");
  check->Expect(traced.exit_code == 0, "traced run failed: " + traced.output);
  if (traced.exit_code != 0) return;

  TraceReadStats stats;
  const auto found = ScanDynamic(ReadTrace(dir.Sub("trace.jsonl"), &stats),
                                 {.seed = 7});
  check->Expect(stats.malformed == 0, "malformed trace lines");
  const DynamicFacts f = ScanFacts(found);

  json oracle = json::parse(
      ReadFileOrDie(FixturePath("shop_artifacts/expected_dynamic.json")));
  std::map<std::string, int> want_reasons;
  std::map<std::string, int> want_conv;
  for (const json& r : oracle) {
    if (r["label"] == "RemFuncArg") ++want_reasons[r["detail"]["reason"]];
    if (r["label"] == "RemConvFunc") ++want_conv[r["detail"]["function"]];
  }
  check->Expect(f.total == oracle.size(),
                "candidate total " + std::to_string(f.total) + " vs oracle " +
                    std::to_string(oracle.size()));
  check->Expect(f.func_arg_reasons == want_reasons,
                "RemFuncArg reasons differ from the oracle");
  check->Expect(f.func_arg_reasons.count("explicit_default") &&
                    f.func_arg_reasons.at("explicit_default") == 4,
                "explicit_default count");
  check->Expect(f.func_arg_reasons.count("extra_positional") &&
                    f.func_arg_reasons.at("extra_positional") == 3,
                "extra_positional count");
  check->Expect(f.func_arg_reasons.count("undeclared_keyword") &&
                    f.func_arg_reasons.at("undeclared_keyword") == 1,
                "undeclared_keyword count");
  check->Expect(f.conv_by_function == want_conv,
                "RemConvFunc sites differ from the oracle");
  check->Expect(f.conv_by_function.count("str") == 0,
                "str(s) on a string produced a candidate");
  check->Expect(f.conv_by_function.count("dict") &&
                    f.conv_by_function.at("dict") == 1,
                "dict(mappingproxy) site");
  check->Expect(f.rate_removable, "TAX.rate lacks RemAttrAcc");
  check->Expect(!f.rate_changeable, "TAX.rate got ChUsedAttr");
}

Config ShopConfig(const std::string& run_dir, std::uint64_t seed) {
  Config c = LoadConfig(FixturePath("shop/pyfault.toml"));
  c.run_dir = run_dir;
  c.seed = seed;
  return c;
}

RunResult RunShop(const std::string& run_dir, std::uint64_t seed) {
  return RunPipeline(ShopConfig(run_dir, seed),
                     FixturePath("shop_artifacts/trace.jsonl"),
                     FixturePath("shop_artifacts/coverage.json"));
}

bool SameMatrix(const KillMatrix& x, const KillMatrix& y) {
  if (x.tests != y.tests || x.rows.size() != y.rows.size()) return false;
  for (std::size_t i = 0; i < x.rows.size(); ++i) {
    if (x.rows[i].mutant_id != y.rows[i].mutant_id ||
        x.rows[i].kills != y.rows[i].kills) {
      return false;
    }
  }
  return true;
}

struct ShopRuns {
  TempDir dir;
  std::map<std::uint64_t, RunResult> runs;
};

// 5. Campaign results against the brute-force golden matrices.
void CampaignCorrectness(ShopRuns* shop, Checker* check) {
  for (std::uint64_t seed : {1, 7, 42}) {
    const std::string run_dir = shop->dir.Sub("seed" + std::to_string(seed));
    const RunResult& run =
        shop->runs.emplace(seed, RunShop(run_dir, seed)).first->second;
    const KillMatrix golden = ReadKillMatrix(FixturePath(
        "golden/shop_seed" + std::to_string(seed) + ".killmatrix.json"));
    check->Expect(run.campaign.baseline.inventory.size() == 10,
                  "fixture does not have 10 tests");
    check->Expect(SameMatrix(run.matrix, golden),
                  "seed " + std::to_string(seed) + " differs from golden");
    check->Expect(SameMatrix(ReadKillMatrix(RunPaths(run_dir).kill_matrix),
                             golden),
                  "seed " + std::to_string(seed) + " file differs");
  }
  // Same mutants evaluated in a shuffled order on two workers.
  const Config config = ShopConfig(shop->dir.Sub("shuffled"), 7);
  std::map<std::string, SyntaxTree> trees;
  const RunResult found =
      Identify(config, FixturePath("shop_artifacts/trace.jsonl"),
               FixturePath("shop_artifacts/coverage.json"), &trees);
  const MutationBatch batch =
      GenerateMutants(found.pruned.kept, trees, {.seed = 7});
  RunnerConfig rc;
  rc.project_root = config.project_root;
  rc.test_command = config.test_command;
  rc.run_dir = config.run_dir;
  rc.workers = 2;
  CampaignOptions options;
  options.seed = 7;
  options.shuffle_seed = 99;
  const CampaignResult shuffled =
      RunCampaign(batch.mutants, batch.invalid, rc, options);
  const KillMatrix matrix = BuildKillMatrix(
      shuffled.outcomes, shuffled.baseline.inventory, "pyfault");
  check->Expect(SameMatrix(matrix, ReadKillMatrix(FixturePath(
                                       "golden/shop_seed7.killmatrix.json"))),
                "shuffled order differs from golden");
}

void CheckReportScores(const json& report, const std::string& name,
                       Checker* check) {
  const json& s = report["summary"];
  const long killed = s["killed"];
  const long survived = s["survived"];
  long outcome_killed = 0, outcome_survived = 0, outcome_invalid = 0;
  for (const json& o : report["outcomes"]) {
    outcome_killed += o["status"] == "killed";
    outcome_survived += o["status"] == "survived";
    outcome_invalid += o["status"] != "killed" && o["status"] != "survived";
  }
  check->Expect(killed == outcome_killed && survived == outcome_survived,
                name + ": summary counts differ from outcomes");
  check->Expect(s["invalid_syntactic"].get<long>() +
                        s["invalid_runtime"].get<long>() ==
                    outcome_invalid,
                name + ": invalid count");
  if (killed + survived == 0) {
    check->Expect(s["score"] == "NA", name + ": empty score not NA");
  } else {
    check->Expect(s["score"].get<double>() ==
                      static_cast<double>(killed) / (killed + survived),
                  name + ": score");
  }
  for (const json& row : report["operators"]) {
    const long k = row["killed"];
    const long v = row["survived"];
    const std::string label = name + "/" + row["operator"].get<std::string>();
    if (k + v == 0) {
      check->Expect(row["score"] == "NA", label + ": expected NA");
    } else {
      check->Expect(row["score"].get<double>() ==
                        static_cast<double>(k) / (k + v),
                    label + ": score");
    }
  }
}

// 6. Score arithmetic on every fixture run, and NA for empty operators.
void ScoreArithmetic(ShopRuns* shop, Checker* check) {
  std::vector<MutantOutcome> outcomes;
  auto add = [&](MutantStatus s, int n) {
    for (int i = 0; i < n; ++i) {
      MutantOutcome o;
      o.status = s;
      outcomes.push_back(o);
    }
  };
  add(MutantStatus::kKilled, 60);
  add(MutantStatus::kSurvived, 12);
  add(MutantStatus::kInvalidRuntime, 5);
  add(MutantStatus::kInvalidSyntactic, 4);
  check->Expect(FormatScore(MutationScore(outcomes)) == "83.33", "60/72");
  check->Expect(FormatScore(MutationScore({})) == "NA", "empty score");

  for (const auto& [seed, run] : shop->runs) {
    const json report = json::parse(
        ReadFileOrDie(RunPaths(ResolvedRunDir(run.config)).report_json));
    CheckReportScores(report, "seed " + std::to_string(seed), check);
  }
  // Static-only run: the five dynamic operators have no candidates.
  Config config = ShopConfig(shop->dir.Sub("static"), 7);
  config.static_only = true;
  const RunResult run =
      RunPipeline(config, "", FixturePath("shop_artifacts/coverage.json"));
  const json report =
      json::parse(ReadFileOrDie(RunPaths(config.run_dir).report_json));
  CheckReportScores(report, "static", check);
  int na_rows = 0;
  for (const json& row : report["operators"]) {
    na_rows += row["candidates"] == 0 && row["score"] == "NA";
  }
  check->Expect(na_rows == 5, "static run NA rows: " + std::to_string(na_rows));
  const std::string md = ReadFileOrDie(RunPaths(config.run_dir).report_md);
  check->Expect(md.find("| RemMetCall | 0 | NA |") != std::string::npos,
                "markdown lacks an NA row");
}

// 7. Comparison metrics against brute force on random matrices.
void AnalyticsEquivalence(Checker* check) {
  std::mt19937_64 rng(20261015);
  int mismatches = 0;
  for (int round = 0; round < 1000; ++round) {
    const testing::MaskPair p = testing::RandomMaskPair(rng, 12, 8);
    const auto want = testing::BruteForce(p);
    const KillMatrix a = testing::MatrixFromMasks(p.a, p.tests, "a");
    const KillMatrix b = testing::MatrixFromMasks(p.b, p.tests, "b");
    const Comparison c = Compare(a, b);
    const Comparison r = Compare(b, a);
    bool ok = c.graph.edges == want.edges &&
              c.unique_a.unique == want.unique_a &&
              c.unique_b.unique == want.unique_b &&
              c.shared_strict.size() == want.strict &&
              c.shared_relaxed.size() == want.relaxed &&
              c.cross_kill_strict.zero_denominator == !want.cross_strict &&
              c.test_overlap.zero_denominator == !want.overlap;
    if (ok && want.cross_strict) {
      ok = std::abs(c.cross_kill_strict.value - *want.cross_strict) <= 1e-12 &&
           std::abs(c.cross_kill_relaxed.value - *want.cross_relaxed) <= 1e-12;
    }
    if (ok && want.overlap) {
      ok = std::abs(c.test_overlap.value - *want.overlap) <= 1e-12;
    }
    for (double v : {c.cross_kill_strict.value, c.cross_kill_relaxed.value,
                     c.test_overlap.value}) {
      ok = ok && v >= 0 && v <= 1;
    }
    ok = ok && std::abs(c.cross_kill_relaxed.value -
                        r.cross_kill_relaxed.value) <= 1e-12 &&
         std::abs(c.cross_kill_strict.value - r.cross_kill_strict.value) <=
             1e-12 &&
         std::abs(c.test_overlap.value - r.test_overlap.value) <= 1e-12 &&
         c.unique_a.unique == r.unique_b.unique &&
         c.unique_b.unique == r.unique_a.unique;
    if (!ok) ++mismatches;
  }
  check->Expect(mismatches == 0,
                std::to_string(mismatches) + " of 1000 matrices disagree");
}

// 8. Cramér's V reference points against a hand-computed chi-squared.
void StatisticsCheck(Checker* check) {
  const ChiSquare perfect = ChiSquareTest({{10, 0}, {0, 10}});
  check->Expect(perfect.cramers_v && *perfect.cramers_v == 1.0,
                "V of [[10,0],[0,10]] is not exactly 1");
  // Margins are all 50 of 100, so every expected cell is 25 and
  // chi2 = 4 * 5^2 / 25 = 4; V = sqrt(4 / (100 * 1)) = 0.2.
  const double hand_chi2 = 4 * 25.0 / 25.0;
  const double hand_v = std::sqrt(hand_chi2 / 100.0);
  const ChiSquare weak = ChiSquareTest({{20, 30}, {30, 20}});
  check->Expect(weak.chi2 && std::abs(*weak.chi2 - hand_chi2) <= 1e-9,
                "chi2 of [[20,30],[30,20]]");
  check->Expect(weak.cramers_v && std::abs(*weak.cramers_v - hand_v) <= 1e-9 &&
                    std::abs(*weak.cramers_v - 0.2) <= 1e-9,
                "V of [[20,30],[30,20]]");
}

// 9. Two full runs with one seed give byte-identical artifacts.
void Determinism(ShopRuns* shop, Checker* check) {
  const std::string first = shop->dir.Sub("det1");
  const std::string second = shop->dir.Sub("det2");
  RunShop(first, 7);
  RunShop(second, 7);
  for (const std::string& file : {std::string("candidates.jsonl"),
                                  std::string("report.json")}) {
    const std::string x = ReadFileOrDie(first + "/" + file);
    const std::string y = ReadFileOrDie(second + "/" + file);
    check->Expect(!x.empty() && x == y, file + " differs between runs");
  }
}

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;  // 0 when no limit is stated
  std::function<void(Checker*)> run;
};

int Main() {
  ShopRuns shop;
  const std::vector<Criterion> criteria = {
      {1, "operator fidelity", 1, OperatorFidelity},
      {2, "known fixes reversed", 1, FixReversal},
      {3, "static scan completeness", 1, StaticCompleteness},
      {4, "dynamic heuristics", 30, DynamicHeuristics},
      {5, "campaign matches golden kill matrices", 300,
       [&](Checker* c) { CampaignCorrectness(&shop, c); }},
      {6, "mutation score arithmetic", 0,
       [&](Checker* c) { ScoreArithmetic(&shop, c); }},
      {7, "analytics equal brute force", 30, AnalyticsEquivalence},
      {8, "Cramer's V reference points", 0, StatisticsCheck},
      {9, "determinism", 0, [&](Checker* c) { Determinism(&shop, c); }},
  };
  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Checker check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(&check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    if (criterion.limit_seconds > 0 && seconds > criterion.limit_seconds) {
      check.Expect(false, "took longer than the time limit");
    }
    char timing[32];
    std::snprintf(timing, sizeof(timing), "%.2fs", seconds);
    std::cout << "C" << criterion.number << " "
              << (check.ok() ? "PASS" : "FAIL") << "  " << criterion.title
              << " (" << check.checks() << " checks, " << timing << ")\n";
    for (const std::string& f : check.failures()) {
      std::cout << "    " << f << "\n";
    }
    failed += !check.ok();
  }
  std::cout << (failed == 0 ? "all criteria passed"
                            : std::to_string(failed) + " criteria failed")
            << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace pyfault

int main() { return pyfault::Main(); }
