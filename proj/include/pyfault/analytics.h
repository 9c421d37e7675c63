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

#ifndef PYFAULT_ANALYTICS_H_
#define PYFAULT_ANALYTICS_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pyfault/kill_matrix.h"

namespace pyfault {

struct GraphNode {
  int side = 0;  // 0 for the first matrix, 1 for the second
  std::string mutant_id;
  std::string tool;
  std::set<std::string> kills;
};

// Edge (i, j): node i dynamically subsumes node j. Self-edges are not
// stored.
struct SubsumptionGraph {
  std::vector<GraphNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted
};

bool Subsumes(const std::set<std::string>& m, const std::set<std::string>& n);

// Nodes are the rows of `a` followed by the rows of `b`. With
// `require_shared_tests`, throws EmptyUniverse when the matrices have no
// test in common.
SubsumptionGraph BuildSubsumption(const KillMatrix& a, const KillMatrix& b,
                                  bool require_shared_tests = false);

struct UniqueStats {
  std::size_t mutants = 0;
  std::size_t killed = 0;
  std::size_t unique = 0;
  std::size_t unique_survivors = 0;  // unique only because never killed
  std::optional<double> unique_percent;
  std::optional<double> subsumed_percent;
};

// A mutant of `side` is unique when no mutant of the other side subsumes
// it.
UniqueStats UniqueMutants(const SubsumptionGraph& graph, int side);

// Killed mutants paired one-to-one across the two sides. Strict pairs have
// equal kill sets; relaxed pairs need subsumption in either direction.
// Both are maximum matchings. Pairs are node indices (side 0, side 1).
std::vector<std::pair<std::size_t, std::size_t>> SharedMutants(
    const SubsumptionGraph& graph, bool relaxed);

struct Ratio {
  double value = 0;
  bool zero_denominator = false;
};

// shared / (killed_a + killed_b - shared).
Ratio CrossKillRate(std::size_t killed_a, std::size_t killed_b,
                    std::size_t shared_killed);

// Jaccard index of the tests that kill at least one mutant of each matrix.
// The timeout pseudo-test is not a test and is ignored.
Ratio TestOverlapRatio(const KillMatrix& a, const KillMatrix& b);

struct Correlation {
  std::optional<double> r;  // undefined for a constant input or n < 3
  std::optional<double> p_value;
};

Correlation Pearson(const std::vector<double>& x, const std::vector<double>& y);
Correlation Spearman(const std::vector<double>& x, const std::vector<double>& y);

struct ChiSquare {
  std::optional<double> chi2;  // undefined when a margin is zero
  int df = 0;
  double n = 0;
  std::optional<double> p_value;
  std::optional<double> cramers_v;
};

// Pearson's chi-squared without continuity correction.
ChiSquare ChiSquareTest(const std::vector<std::vector<double>>& table);

struct Association {
  std::vector<std::string> tests;  // universe the count vectors run over
  std::vector<double> kills_a;     // per test, mutants of a it kills
  std::vector<double> kills_b;
  Correlation pearson;
  Correlation spearman;
  std::vector<std::vector<double>> outcome_table;  // [[killed, survived]]x2
  ChiSquare chi_square;
};

inline constexpr double kSignificance = 0.05;

Association AssociationStats(const KillMatrix& a, const KillMatrix& b);

struct Comparison {
  std::string tool_a;
  std::string tool_b;
  SubsumptionGraph graph;
  UniqueStats unique_a;
  UniqueStats unique_b;
  std::vector<std::pair<std::size_t, std::size_t>> shared_strict;
  std::vector<std::pair<std::size_t, std::size_t>> shared_relaxed;
  Ratio cross_kill_strict;
  Ratio cross_kill_relaxed;
  Ratio test_overlap;
  Association association;
};

Comparison Compare(const KillMatrix& a, const KillMatrix& b,
                   bool require_shared_tests = false);

nlohmann::json ComparisonToJson(const Comparison& c);
nlohmann::json GraphToJson(const SubsumptionGraph& graph);
std::string GraphToDot(const SubsumptionGraph& graph);

}  // namespace pyfault

#endif  // PYFAULT_ANALYTICS_H_
