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

#include "pyfault/analytics.h"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <map>
#include <numeric>

#include "pyfault/errors.h"

namespace pyfault {
namespace {

using json = nlohmann::json;

std::string SideTool(const KillMatrix& m, std::size_t row) {
  return m.rows[row].tool;
}

std::set<std::string> KillingTests(const KillMatrix& m) {
  std::set<std::string> out;
  for (const KillRow& row : m.rows) out.insert(row.kills.begin(), row.kills.end());
  out.erase(std::string(kTimeoutTest));
  return out;
}

std::vector<double> Ranks(const std::vector<double>& v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double mean = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean;
    i = j + 1;
  }
  return ranks;
}

json OptionalNumber(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json RatioJson(const Ratio& r) {
  return json{{"value", r.value}, {"zero_denominator", r.zero_denominator}};
}

json UniqueJson(const UniqueStats& u) {
  return json{{"mutants", u.mutants},
              {"killed", u.killed},
              {"unique", u.unique},
              {"unique_survivors", u.unique_survivors},
              {"unique_percent", OptionalNumber(u.unique_percent)},
              {"subsumed_percent", OptionalNumber(u.subsumed_percent)}};
}

json CorrelationJson(const Correlation& c) {
  json j{{"r", OptionalNumber(c.r)}, {"p_value", OptionalNumber(c.p_value)}};
  j["significant"] = c.p_value ? json(*c.p_value <= kSignificance) : json(nullptr);
  return j;
}

json PairsJson(const SubsumptionGraph& g,
               const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  json out = json::array();
  for (const auto& [a, b] : pairs) {
    out.push_back({g.nodes[a].mutant_id, g.nodes[b].mutant_id});
  }
  return out;
}

}  // namespace

bool Subsumes(const std::set<std::string>& m, const std::set<std::string>& n) {
  return !m.empty() && std::includes(n.begin(), n.end(), m.begin(), m.end());
}

SubsumptionGraph BuildSubsumption(const KillMatrix& a, const KillMatrix& b,
                                  bool require_shared_tests) {
  if (require_shared_tests) {
    std::vector<std::string> shared;
    std::set_intersection(a.tests.begin(), a.tests.end(), b.tests.begin(),
                          b.tests.end(), std::back_inserter(shared));
    if (shared.empty()) throw EmptyUniverse("the matrices share no tests");
  }
  SubsumptionGraph g;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    g.nodes.push_back(GraphNode{0, a.rows[i].mutant_id, SideTool(a, i),
                                a.rows[i].kills});
  }
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    g.nodes.push_back(GraphNode{1, b.rows[i].mutant_id, SideTool(b, i),
                                b.rows[i].kills});
  }
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (g.nodes[i].kills.empty()) continue;
    for (std::size_t j = 0; j < g.nodes.size(); ++j) {
      if (i != j && Subsumes(g.nodes[i].kills, g.nodes[j].kills)) {
        g.edges.emplace_back(i, j);
      }
    }
  }
  return g;
}

UniqueStats UniqueMutants(const SubsumptionGraph& graph, int side) {
  std::vector<bool> subsumed(graph.nodes.size(), false);
  for (const auto& [from, to] : graph.edges) {
    if (graph.nodes[from].side != graph.nodes[to].side) subsumed[to] = true;
  }
  UniqueStats s;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const GraphNode& n = graph.nodes[i];
    if (n.side != side) continue;
    ++s.mutants;
    if (!n.kills.empty()) ++s.killed;
    if (subsumed[i]) continue;
    ++s.unique;
    if (n.kills.empty()) ++s.unique_survivors;
  }
  if (s.mutants > 0) {
    s.unique_percent = 100.0 * static_cast<double>(s.unique) /
                       static_cast<double>(s.mutants);
    s.subsumed_percent = 100.0 - *s.unique_percent;
  }
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> SharedMutants(
    const SubsumptionGraph& graph, bool relaxed) {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    if (graph.nodes[i].kills.empty()) continue;
    (graph.nodes[i].side == 0 ? left : right).push_back(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (!relaxed) {
    // Equal kill sets form cliques, so greedy pairing within each group is
    // already maximum.
    std::map<std::set<std::string>, std::vector<std::size_t>> groups;
    for (std::size_t r : right) groups[graph.nodes[r].kills].push_back(r);
    std::map<std::set<std::string>, std::size_t> used;
    for (std::size_t l : left) {
      auto it = groups.find(graph.nodes[l].kills);
      if (it == groups.end()) continue;
      std::size_t& k = used[it->first];
      if (k < it->second.size()) out.emplace_back(l, it->second[k++]);
    }
    return out;
  }
  using Graph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph bip(left.size() + right.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      const auto& x = graph.nodes[left[i]].kills;
      const auto& y = graph.nodes[right[j]].kills;
      if (Subsumes(x, y) || Subsumes(y, x)) {
        boost::add_edge(i, left.size() + j, bip);
      }
    }
  }
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(
      boost::num_vertices(bip));
  boost::edmonds_maximum_cardinality_matching(bip, &mate[0]);
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (mate[i] != boost::graph_traits<Graph>::null_vertex()) {
      out.emplace_back(left[i], right[mate[i] - left.size()]);
    }
  }
  return out;
}

Ratio CrossKillRate(std::size_t killed_a, std::size_t killed_b,
                    std::size_t shared_killed) {
  const double denom = static_cast<double>(killed_a) +
                       static_cast<double>(killed_b) -
                       static_cast<double>(shared_killed);
  if (denom <= 0) return Ratio{0, true};
  return Ratio{static_cast<double>(shared_killed) / denom, false};
}

Ratio TestOverlapRatio(const KillMatrix& a, const KillMatrix& b) {
  const std::set<std::string> ka = KillingTests(a);
  const std::set<std::string> kb = KillingTests(b);
  std::vector<std::string> both;
  std::vector<std::string> either;
  std::set_intersection(ka.begin(), ka.end(), kb.begin(), kb.end(),
                        std::back_inserter(both));
  std::set_union(ka.begin(), ka.end(), kb.begin(), kb.end(),
                 std::back_inserter(either));
  if (either.empty()) return Ratio{0, true};
  return Ratio{static_cast<double>(both.size()) /
                   static_cast<double>(either.size()),
               false};
}

Correlation Pearson(const std::vector<double>& x, const std::vector<double>& y) {
  Correlation c;
  const std::size_t n = x.size();
  if (n != y.size() || n < 3) return c;
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) return c;
  const double r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
  c.r = r;
  const double df = static_cast<double>(n) - 2;
  if (std::abs(r) >= 1.0) {
    c.p_value = 0.0;
  } else {
    const double t = r * std::sqrt(df / (1 - r * r));
    boost::math::students_t dist(df);
    c.p_value = 2 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
  }
  return c;
}

Correlation Spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) return Correlation{};
  return Pearson(Ranks(x), Ranks(y));
}

ChiSquare ChiSquareTest(const std::vector<std::vector<double>>& table) {
  ChiSquare out;
  const std::size_t rows = table.size();
  const std::size_t cols = rows ? table[0].size() : 0;
  std::vector<double> row_sum(rows, 0), col_sum(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      row_sum[i] += table[i][j];
      col_sum[j] += table[i][j];
      out.n += table[i][j];
    }
  }
  if (rows < 2 || cols < 2) return out;
  out.df = static_cast<int>((rows - 1) * (cols - 1));
  for (double s : row_sum) if (s == 0) return out;
  for (double s : col_sum) if (s == 0) return out;
  double chi2 = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double expected = row_sum[i] * col_sum[j] / out.n;
      const double d = table[i][j] - expected;
      chi2 += d * d / expected;
    }
  }
  out.chi2 = chi2;
  boost::math::chi_squared dist(out.df);
  out.p_value = boost::math::cdf(boost::math::complement(dist, chi2));
  const double k = static_cast<double>(std::min(rows, cols)) - 1;
  out.cramers_v = std::sqrt(chi2 / (out.n * k));
  return out;
}

Association AssociationStats(const KillMatrix& a, const KillMatrix& b) {
  Association s;
  std::set<std::string> universe(a.tests.begin(), a.tests.end());
  universe.insert(b.tests.begin(), b.tests.end());
  universe.erase(std::string(kTimeoutTest));
  s.tests.assign(universe.begin(), universe.end());
  auto counts = [&](const KillMatrix& m) {
    std::vector<double> v;
    for (const std::string& t : s.tests) {
      double k = 0;
      for (const KillRow& row : m.rows) k += row.kills.count(t);
      v.push_back(k);
    }
    return v;
  };
  s.kills_a = counts(a);
  s.kills_b = counts(b);
  s.pearson = Pearson(s.kills_a, s.kills_b);
  s.spearman = Spearman(s.kills_a, s.kills_b);
  auto outcome_row = [](const KillMatrix& m) {
    double killed = 0;
    for (std::size_t i = 0; i < m.rows.size(); ++i) killed += m.Killed(i);
    return std::vector<double>{killed, static_cast<double>(m.rows.size()) - killed};
  };
  s.outcome_table = {outcome_row(a), outcome_row(b)};
  s.chi_square = ChiSquareTest(s.outcome_table);
  return s;
}

Comparison Compare(const KillMatrix& a, const KillMatrix& b,
                   bool require_shared_tests) {
  Comparison c;
  c.tool_a = a.rows.empty() ? "" : a.rows.front().tool;
  c.tool_b = b.rows.empty() ? "" : b.rows.front().tool;
  c.graph = BuildSubsumption(a, b, require_shared_tests);
  c.unique_a = UniqueMutants(c.graph, 0);
  c.unique_b = UniqueMutants(c.graph, 1);
  c.shared_strict = SharedMutants(c.graph, false);
  c.shared_relaxed = SharedMutants(c.graph, true);
  c.cross_kill_strict = CrossKillRate(c.unique_a.killed, c.unique_b.killed,
                                      c.shared_strict.size());
  c.cross_kill_relaxed = CrossKillRate(c.unique_a.killed, c.unique_b.killed,
                                       c.shared_relaxed.size());
  c.test_overlap = TestOverlapRatio(a, b);
  c.association = AssociationStats(a, b);
  return c;
}

json GraphToJson(const SubsumptionGraph& graph) {
  json nodes = json::array();
  for (const GraphNode& n : graph.nodes) {
    nodes.push_back({{"side", n.side},
                     {"mutant_id", n.mutant_id},
                     {"tool", n.tool},
                     {"kills", n.kills}});
  }
  json edges = json::array();
  for (const auto& [from, to] : graph.edges) edges.push_back({from, to});
  return json{{"nodes", nodes}, {"edges", edges}};
}

std::string GraphToDot(const SubsumptionGraph& graph) {
  std::string out = "digraph subsumption {\n";
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const GraphNode& n = graph.nodes[i];
    out += "  n" + std::to_string(i) + " [label=\"" + n.tool + ":" +
           n.mutant_id + "\"" +
           (n.side == 0 ? ", shape=box" : ", shape=ellipse") +
           (n.kills.empty() ? ", style=dashed" : "") + "];\n";
  }
  for (const auto& [from, to] : graph.edges) {
    out += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + ";\n";
  }
  return out + "}\n";
}

json ComparisonToJson(const Comparison& c) {
  const Association& s = c.association;
  json chi{{"chi2", OptionalNumber(s.chi_square.chi2)},
           {"df", s.chi_square.df},
           {"n", s.chi_square.n},
           {"p_value", OptionalNumber(s.chi_square.p_value)},
           {"cramers_v", OptionalNumber(s.chi_square.cramers_v)}};
  chi["significant"] = s.chi_square.p_value
                           ? json(*s.chi_square.p_value <= kSignificance)
                           : json(nullptr);
  return json{
      {"schema_version", 1},
      {"tool_a", c.tool_a},
      {"tool_b", c.tool_b},
      {"unique", {{"a", UniqueJson(c.unique_a)}, {"b", UniqueJson(c.unique_b)}}},
      {"shared",
       {{"strict", PairsJson(c.graph, c.shared_strict)},
        {"relaxed", PairsJson(c.graph, c.shared_relaxed)}}},
      {"cross_kill",
       {{"strict", RatioJson(c.cross_kill_strict)},
        {"relaxed", RatioJson(c.cross_kill_relaxed)}}},
      {"test_overlap", RatioJson(c.test_overlap)},
      {"association",
       {{"tests", s.tests},
        {"kills_a", s.kills_a},
        {"kills_b", s.kills_b},
        {"pearson", CorrelationJson(s.pearson)},
        {"spearman", CorrelationJson(s.spearman)},
        {"outcome_table", s.outcome_table},
        {"chi_square", chi}}},
      {"subsumption_edges", c.graph.edges.size()},
  };
}

}  // namespace pyfault
