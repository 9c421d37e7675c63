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

#include "pyfault/static_scan.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "common/test_support.h"
#include "json.hpp"

namespace pyfault {
namespace {

using ::pyfault::testing::FixturePath;
using ::pyfault::testing::ReadFileOrDie;

std::vector<CandidateRecord> Conditions(const std::string& source,
                                        bool include_asserts = false) {
  StaticScanOptions options;
  options.include_asserts = include_asserts;
  return ScanConditions(Parse(source, "s.py"), options);
}

const RemExpCondMeta& CondMeta(const CandidateRecord& c) {
  return std::get<RemExpCondMeta>(c.metadata);
}

TEST(ScanContainersTest, ListLiteral) {
  const auto found = ScanContainers(Parse("x = [1, 2, 3]\n", "s.py"));
  ASSERT_EQ(found.size(), 1u);
  const auto& meta = std::get<RemElContMeta>(found[0].metadata);
  EXPECT_EQ(meta.container, "list");
  EXPECT_EQ(meta.element_count, 3);
  EXPECT_EQ(found[0].loc.ToString(), "s.py:1:4-1:13");
}

TEST(ScanContainersTest, EmptyAndComprehensionsExcluded) {
  EXPECT_TRUE(ScanContainers(Parse("a = []\nb = {}\nc = ()\n"
                                   "d = [x for x in y]\ne = {k: 1 for k in y}\n",
                                   "s.py"))
                  .empty());
}

TEST(ScanContainersTest, NestedContainersEachCount) {
  const auto found = ScanContainers(Parse("m = [[1], (2, 3), {4}]\n", "s.py"));
  ASSERT_EQ(found.size(), 4u);
  EXPECT_EQ(std::get<RemElContMeta>(found[0].metadata).element_count, 3);
}

TEST(ScanContainersTest, DictPairsRecordUnpacking) {
  const auto found = ScanContainers(Parse("d = {'a': 1, **rest}\n", "s.py"));
  ASSERT_EQ(found.size(), 1u);
  const auto& meta = std::get<RemElContMeta>(found[0].metadata);
  EXPECT_EQ(meta.container, "dict");
  ASSERT_EQ(meta.key_value_pairs.size(), 2u);
  EXPECT_EQ(meta.key_value_pairs[0].first, 0);
  EXPECT_FALSE(meta.key_value_pairs[1].first.has_value());
}

TEST(ScanConditionsTest, AndInIf) {
  const auto found = Conditions("if a and b:\n    pass\n");
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(CondMeta(found[0]).operand_count, 2);
  EXPECT_EQ(CondMeta(found[0]).context, "if");
  EXPECT_EQ(CondMeta(found[0]).structure, "and(#0,#1)");
}

TEST(ScanConditionsTest, NegationIsTransparent) {
  const auto found = Conditions("x = a and not b\n");
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(CondMeta(found[0]).operand_count, 2);
  EXPECT_EQ(CondMeta(found[0]).structure, "and(#0,not(#1))");

  const auto nested = Conditions("while not (a or b) and c:\n    pass\n");
  ASSERT_EQ(nested.size(), 1u);
  EXPECT_EQ(CondMeta(nested[0]).operand_count, 3);
  EXPECT_EQ(CondMeta(nested[0]).structure, "and(not(or(#0,#1)),#2)");
  EXPECT_EQ(CondMeta(nested[0]).context, "while");
}

TEST(ScanConditionsTest, ChainedComparisonIsNotCompound) {
  EXPECT_TRUE(Conditions("if a < b < c:\n    pass\n").empty());
}

TEST(ScanConditionsTest, BoolOpsInsideCallsAreSeparateCandidates) {
  const auto found = Conditions("f(a or b, c and d)\n");
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(CondMeta(found[0]).context, "expression");
}

TEST(ScanConditionsTest, IfExpContext) {
  const auto found = Conditions("v = 1 if a and b else 2\n");
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(CondMeta(found[0]).context, "ifexp");
}

TEST(ScanConditionsTest, AssertsExcludedUnlessRequested) {
  const std::string src = "assert a and b\nassert x, y or z\n";
  EXPECT_TRUE(Conditions(src).empty());
  EXPECT_EQ(Conditions(src, true).size(), 2u);
}

TEST(ScanConditionsTest, OperandLocationsResolve) {
  const SyntaxTree tree = Parse("if a and (b or c):\n    pass\n", "s.py");
  const auto found = ScanConditions(tree, {});
  ASSERT_EQ(found.size(), 1u);
  const auto& meta = CondMeta(found[0]);
  ASSERT_EQ(meta.operands.size(), 3u);
  Span span;
  ASSERT_TRUE(tree.ToSpan(meta.operands[0], &span));
  EXPECT_EQ(tree.TextOf(span), "a");
  ASSERT_TRUE(tree.ToSpan(meta.operands[2], &span));
  EXPECT_EQ(tree.TextOf(span), "c");
}

TEST(ScanTest, CandidatesResolveToExpectedKinds) {
  const SyntaxTree tree =
      Parse(ReadFileOrDie(FixturePath("static/scan_corpus.py")), "c.py");
  for (const CandidateRecord& c : ScanContainers(tree)) {
    const NodeId id = Locate(tree, c.loc, NodeCategory::kContainerLiteral);
    EXPECT_TRUE(InCategory(tree.node(id).kind, NodeCategory::kContainerLiteral));
  }
  for (const CandidateRecord& c : ScanConditions(tree, {})) {
    const NodeId id = Locate(tree, c.loc, NodeCategory::kBoolOp);
    EXPECT_EQ(tree.node(id).kind, NodeKind::kBoolOp);
  }
}

TEST(ScanTest, CorpusMatchesAstOracle) {
  const SyntaxTree tree =
      Parse(ReadFileOrDie(FixturePath("static/scan_corpus.py")), "c.py");
  const auto expected = nlohmann::json::parse(
      ReadFileOrDie(FixturePath("static/scan_corpus.expected.json")));
  std::vector<int> container_lines;
  for (const CandidateRecord& c : ScanContainers(tree)) {
    container_lines.push_back(c.loc.start_line);
  }
  std::vector<int> condition_lines;
  for (const CandidateRecord& c : ScanConditions(tree, {})) {
    condition_lines.push_back(c.loc.start_line);
  }
  std::sort(container_lines.begin(), container_lines.end());
  std::sort(condition_lines.begin(), condition_lines.end());
  EXPECT_EQ(container_lines,
            expected["container_lines"].get<std::vector<int>>());
  EXPECT_EQ(condition_lines,
            expected["condition_lines"].get<std::vector<int>>());
}

TEST(ScanTest, IdempotentAndOrdered) {
  const SyntaxTree tree =
      Parse(ReadFileOrDie(FixturePath("static/scan_corpus.py")), "c.py");
  auto first = ScanContainers(tree);
  auto again = ScanContainers(tree);
  ASSERT_EQ(first.size(), again.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    EXPECT_EQ(CandidateToJson(first[i]), CandidateToJson(again[i]));
  }
  // Pre-order: every candidate starts no earlier than the previous one.
  for (std::size_t i = 1; i < first.size(); ++i) {
    EXPECT_LE(std::make_pair(first[i - 1].loc.start_line,
                             first[i - 1].loc.start_col),
              std::make_pair(first[i].loc.start_line, first[i].loc.start_col));
  }
}

}  // namespace
}  // namespace pyfault
