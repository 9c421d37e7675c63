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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "common/test_support.h"
#include "pyfault/errors.h"
#include "pyfault/process.h"

namespace pyfault {
namespace {

namespace fs = std::filesystem;
using ::pyfault::testing::FixturePath;
using ::pyfault::testing::ReadFileOrDie;
using ::pyfault::testing::TempDir;
using ::pyfault::testing::WriteFileOrDie;

constexpr char kPytest[] =
    "env PYTEST_DISABLE_PLUGIN_AUTOLOAD=1 python3 -m pytest -q "
    "-p no:cacheprovider --junitxml={junit}";

constexpr char kCalc[] =
    "def add(a, b):\n"
    "    return a + b\n"
    "\n"
    "\n"
    "def ready():\n"
    "    return True\n";

// A four-test project; one test is skipped.
void WriteCalcProject(const std::string& root) {
  WriteFileOrDie(root + "/pytest.ini",
                 "[pytest]\ntestpaths = tests\npythonpath = .\n");
  WriteFileOrDie(root + "/calc.py", kCalc);
  WriteFileOrDie(root + "/tests/test_calc.py",
                 "import pytest\n"
                 "from calc import add, ready\n\n"
                 "def test_add():\n    assert add(2, 3) == 5\n\n"
                 "def test_add_zero():\n    assert add(0, 0) == 0\n\n"
                 "def test_ready():\n    assert ready()\n\n"
                 "@pytest.mark.skip(reason='later')\n"
                 "def test_later():\n    assert False\n");
}

Mutant CalcMutant(const std::string& id, const std::string& from,
                  const std::string& to) {
  Mutant m;
  m.id = id;
  m.candidate.label = Operator::kRemExpCond;
  m.candidate.loc = SourceLocation{"calc.py", 2, 11, 2, 16};
  m.candidate.metadata = RemExpCondMeta{};
  std::string text = kCalc;
  text.replace(text.find(from), from.size(), to);
  m.mutated_text = text;
  return m;
}

RunnerConfig CalcConfig(const TempDir& dir) {
  RunnerConfig config;
  config.project_root = dir.Sub("project");
  config.run_dir = dir.Sub("run");
  config.test_command = kPytest;
  config.timeout_min_seconds = 4;
  config.timeout_factor = 1;
  return config;
}

std::vector<TestVerdict> Report(
    std::initializer_list<std::pair<const char*, Verdict>> cases) {
  std::vector<TestVerdict> out;
  for (const auto& [id, v] : cases) out.push_back(TestVerdict{id, v, ""});
  return out;
}

const std::vector<std::string> kInventory = {"m::a", "m::b", "m::c"};

TEST(ClassifyRunTest, FailuresAndErrorsKill) {
  const auto report = Report({{"m::a", Verdict::kPassed},
                              {"m::b", Verdict::kFailed},
                              {"m::c", Verdict::kError}});
  const auto out = ClassifyRun("x", kInventory, false, &report);
  EXPECT_EQ(out.status, MutantStatus::kKilled);
  EXPECT_EQ(out.killing_tests, (std::set<std::string>{"m::b", "m::c"}));
}

TEST(ClassifyRunTest, AllPassSurvives) {
  const auto report = Report({{"m::a", Verdict::kPassed},
                              {"m::b", Verdict::kPassed},
                              {"m::c", Verdict::kPassed},
                              {"m::new", Verdict::kFailed}});
  const auto out = ClassifyRun("x", kInventory, false, &report);
  EXPECT_EQ(out.status, MutantStatus::kSurvived);
  EXPECT_TRUE(out.killing_tests.empty());
}

TEST(ClassifyRunTest, MissingTestCountsAsKill) {
  const auto report = Report({{"m::a", Verdict::kPassed}});
  const auto out = ClassifyRun("x", kInventory, false, &report);
  EXPECT_EQ(out.status, MutantStatus::kKilled);
  EXPECT_EQ(out.killing_tests, (std::set<std::string>{"m::b", "m::c"}));
}

TEST(ClassifyRunTest, TimeoutAndRuntimeInvalid) {
  const auto timed = ClassifyRun("x", kInventory, true, nullptr);
  EXPECT_EQ(timed.status, MutantStatus::kKilled);
  EXPECT_TRUE(timed.timed_out);
  EXPECT_EQ(timed.killing_tests,
            (std::set<std::string>{std::string(kTimeoutTest)}));

  const auto none = ClassifyRun("x", kInventory, false, nullptr);
  EXPECT_EQ(none.status, MutantStatus::kInvalidRuntime);
  EXPECT_EQ(none.failure_signature, "NoReport");

  const auto collection = Report({{"tests.test_m", Verdict::kError}});
  const auto broken = ClassifyRun("x", kInventory, false, &collection);
  EXPECT_EQ(broken.status, MutantStatus::kInvalidRuntime);
  EXPECT_EQ(broken.failure_signature, "CollectionError");
  EXPECT_TRUE(broken.killing_tests.empty());
}

MutantOutcome Outcome(MutantStatus status) {
  MutantOutcome o;
  o.status = status;
  return o;
}

std::vector<MutantOutcome> Outcomes(int killed, int survived, int invalid) {
  std::vector<MutantOutcome> out;
  for (int i = 0; i < killed; ++i) out.push_back(Outcome(MutantStatus::kKilled));
  for (int i = 0; i < survived; ++i) {
    out.push_back(Outcome(MutantStatus::kSurvived));
  }
  for (int i = 0; i < invalid; ++i) {
    out.push_back(Outcome(i % 2 ? MutantStatus::kInvalidRuntime
                                : MutantStatus::kInvalidSyntactic));
  }
  return out;
}

TEST(MutationScoreTest, Arithmetic) {
  EXPECT_NEAR(*MutationScore(Outcomes(60, 12, 9)) * 100, 83.3333333, 1e-6);
  EXPECT_DOUBLE_EQ(*MutationScore(Outcomes(258, 0, 0)), 1.0);
  EXPECT_DOUBLE_EQ(*MutationScore(Outcomes(0, 5, 0)), 0.0);
  EXPECT_FALSE(MutationScore(Outcomes(0, 0, 4)).has_value());
  EXPECT_FALSE(MutationScore({}).has_value());
}

TEST(OutcomeJsonTest, RoundTripWithoutTiming) {
  MutantOutcome o;
  o.mutant_id = "abc";
  o.status = MutantStatus::kKilled;
  o.killing_tests = {"m::a", std::string(kTimeoutTest)};
  o.timed_out = true;
  o.duration = 3.5;
  const auto j = OutcomeToJson(o, false);
  EXPECT_FALSE(j.contains("duration"));
  const auto back = OutcomeFromJson(j);
  EXPECT_EQ(back.mutant_id, "abc");
  EXPECT_EQ(back.killing_tests, o.killing_tests);
  EXPECT_TRUE(back.timed_out);
  EXPECT_TRUE(OutcomeToJson(o, true).contains("duration"));
  for (auto s : {MutantStatus::kKilled, MutantStatus::kSurvived,
                 MutantStatus::kInvalidSyntactic, MutantStatus::kInvalidRuntime}) {
    EXPECT_EQ(StatusFromName(StatusName(s)), s);
  }
  EXPECT_THROW(StatusFromName("zombie"), std::invalid_argument);
}

std::vector<Mutant> Numbered(int n) {
  std::vector<Mutant> out(n);
  for (int i = 0; i < n; ++i) out[i].id = "m" + std::to_string(i);
  return out;
}

TEST(SampleMutantsTest, SizeDeterminismAndNesting) {
  const auto all = Numbered(200);
  EXPECT_EQ(SampleMutants(all, 1.0, 5).size(), 200u);
  EXPECT_EQ(SampleMutants(all, 0.25, 5).size(), 50u);
  EXPECT_EQ(SampleMutants(Numbered(7), 0.5, 5).size(), 4u);  // llround(3.5)
  EXPECT_EQ(SampleMutants(all, 0.25, 5), SampleMutants(all, 0.25, 5));
  EXPECT_NE(SampleMutants(all, 0.25, 5), SampleMutants(all, 0.25, 6));
  // A smaller ratio keeps a subset of a larger one under the same seed.
  const auto small = SampleMutants(all, 0.1, 9);
  const auto large = SampleMutants(all, 0.6, 9);
  EXPECT_TRUE(std::includes(large.begin(), large.end(), small.begin(),
                            small.end()));
  EXPECT_TRUE(std::is_sorted(small.begin(), small.end()));
}

TEST(MutantTimeoutTest, FactorWithFloor) {
  RunnerConfig config;
  config.timeout_factor = 5;
  config.timeout_min_seconds = 10;
  EXPECT_DOUBLE_EQ(MutantTimeout(config, Baseline{{}, 1.0}), 10.0);
  EXPECT_DOUBLE_EQ(MutantTimeout(config, Baseline{{}, 4.0}), 20.0);
}

TEST(CopyProjectTest, SkipsCachesVcsAndRunDir) {
  TempDir dir;
  const std::string root = dir.Sub("p");
  WriteFileOrDie(root + "/a.py", "x = 1\n");
  WriteFileOrDie(root + "/pkg/b.py", "y = 2\n");
  WriteFileOrDie(root + "/.git/HEAD", "ref\n");
  WriteFileOrDie(root + "/pkg/__pycache__/b.cpython-310.pyc", "");
  WriteFileOrDie(root + "/.pytest_cache/v", "");
  WriteFileOrDie(root + "/.pyfault/report.json", "{}");
  CopyProject(root, dir.Sub("copy"), root + "/.pyfault");
  EXPECT_TRUE(fs::exists(dir.Sub("copy/a.py")));
  EXPECT_EQ(ReadFileOrDie(dir.Sub("copy/pkg/b.py")), "y = 2\n");
  EXPECT_FALSE(fs::exists(dir.Sub("copy/.git")));
  EXPECT_FALSE(fs::exists(dir.Sub("copy/pkg/__pycache__")));
  EXPECT_FALSE(fs::exists(dir.Sub("copy/.pytest_cache")));
  EXPECT_FALSE(fs::exists(dir.Sub("copy/.pyfault")));
}

// pytest node ids rendered the way JUnit reports name them.
std::vector<std::string> CollectedIds(const std::string& project) {
  const auto r = RunShell(
      "env PYTEST_DISABLE_PLUGIN_AUTOLOAD=1 python3 -m pytest -q "
      "--collect-only -p no:cacheprovider",
      project, {{"PYTHONDONTWRITEBYTECODE", "1"}}, 60, "");
  std::vector<std::string> ids;
  std::istringstream in(r.output);
  std::string line;
  while (std::getline(in, line)) {
    const auto sep = line.find("::");
    if (sep == std::string::npos || line.find(".py") > sep) continue;
    std::string module = line.substr(0, line.find(".py"));
    std::replace(module.begin(), module.end(), '/', '.');
    ids.push_back(module + line.substr(sep));
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

TEST(BaselineCheckTest, ShopInventoryMatchesCollection) {
  TempDir dir;
  RunnerConfig config;
  config.project_root = FixturePath("shop");
  config.run_dir = dir.Sub("run");
  config.test_command = kPytest;
  const Baseline baseline = BaselineCheck(config);
  EXPECT_EQ(baseline.inventory.size(), 10u);
  EXPECT_EQ(baseline.inventory, CollectedIds(FixturePath("shop")));
  EXPECT_GT(baseline.seconds, 0);
  EXPECT_FALSE(fs::exists(dir.Sub("run/work/baseline")));
  EXPECT_TRUE(fs::exists(dir.Sub("run/logs/baseline.log")));
  EXPECT_FALSE(fs::exists(FixturePath("shop/__pycache__")));
}

TEST(BaselineCheckTest, RedSuiteNamesFailingTests) {
  TempDir dir;
  WriteCalcProject(dir.Sub("project"));
  WriteFileOrDie(dir.Sub("project/calc.py"),
                 std::string(kCalc).replace(std::string(kCalc).find("a + b"),
                                            5, "a * b"));
  try {
    BaselineCheck(CalcConfig(dir));
    FAIL() << "expected BaselineRed";
  } catch (const BaselineRed& e) {
    EXPECT_EQ(e.failing_tests(),
              std::vector<std::string>{"tests.test_calc::test_add"});
  }
}

TEST(BaselineCheckTest, NoTestsIsRed) {
  TempDir dir;
  WriteFileOrDie(dir.Sub("project/calc.py"), kCalc);
  EXPECT_THROW(BaselineCheck(CalcConfig(dir)), BaselineRed);
}

TEST(RunCampaignTest, KillSurviveTimeoutAndInvalid) {
  TempDir dir;
  WriteCalcProject(dir.Sub("project"));
  const RunnerConfig config = CalcConfig(dir);
  std::vector<Mutant> mutants = {
      CalcMutant("a_kill", "a + b", "a - b"),
      CalcMutant("b_survive", "a + b", "b + a"),
      CalcMutant("c_hang", "    return True\n",
                 "    while True:\n        pass\n"),
      CalcMutant("d_import", "def add", "import no_such_module\n\n\ndef add"),
  };
  InvalidMutant bad;
  bad.id = "e_syntax";
  bad.failure_signature = "SerializationError";
  const CampaignResult result = RunCampaign(mutants, {bad}, config, {});
  EXPECT_EQ(result.baseline.inventory,
            (std::vector<std::string>{"tests.test_calc::test_add",
                                      "tests.test_calc::test_add_zero",
                                      "tests.test_calc::test_ready"}));
  ASSERT_EQ(result.outcomes.size(), 5u);
  const auto& kill = result.outcomes[0];
  EXPECT_EQ(kill.mutant_id, "a_kill");
  EXPECT_EQ(kill.status, MutantStatus::kKilled);
  EXPECT_EQ(kill.killing_tests,
            std::set<std::string>{"tests.test_calc::test_add"});
  EXPECT_EQ(result.outcomes[1].status, MutantStatus::kSurvived);
  const auto& hang = result.outcomes[2];
  EXPECT_EQ(hang.status, MutantStatus::kKilled);
  EXPECT_TRUE(hang.timed_out);
  EXPECT_EQ(hang.killing_tests,
            std::set<std::string>{std::string(kTimeoutTest)});
  EXPECT_EQ(result.outcomes[3].status, MutantStatus::kInvalidRuntime);
  EXPECT_EQ(result.outcomes[4].status, MutantStatus::kInvalidSyntactic);
  EXPECT_EQ(result.outcomes[4].failure_signature, "SerializationError");
  // The project itself is never touched.
  EXPECT_EQ(ReadFileOrDie(dir.Sub("project/calc.py")), kCalc);
  EXPECT_TRUE(fs::exists(dir.Sub("run/logs/a_kill.log")));
}

TEST(RunCampaignTest, SamplingAndWorkersDoNotChangeOutcomes) {
  TempDir dir;
  WriteCalcProject(dir.Sub("project"));
  RunnerConfig config = CalcConfig(dir);
  std::vector<Mutant> mutants = {
      CalcMutant("k1", "a + b", "a - b"), CalcMutant("k2", "a + b", "a"),
      CalcMutant("s1", "a + b", "b + a"), CalcMutant("k3", "True", "False")};
  CampaignOptions options;
  options.sample_ratio = 0.5;
  options.seed = 3;
  const CampaignResult serial = RunCampaign(mutants, {}, config, options);
  ASSERT_EQ(serial.outcomes.size(), 2u);
  ASSERT_EQ(serial.unsampled.size(), 2u);
  config.workers = 2;
  options.shuffle_seed = 11;
  const CampaignResult parallel = RunCampaign(mutants, {}, config, options);
  ASSERT_EQ(parallel.outcomes.size(), 2u);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(OutcomeToJson(serial.outcomes[i], false),
              OutcomeToJson(parallel.outcomes[i], false));
  }
  EXPECT_EQ(serial.unsampled, parallel.unsampled);
}

}  // namespace
}  // namespace pyfault
