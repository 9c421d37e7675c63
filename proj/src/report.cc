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

#include "pyfault/report.h"

#include <cstdio>
#include <fstream>
#include <map>

#include "pyfault/errors.h"

namespace pyfault {
namespace {

using json = nlohmann::json;

struct OperatorRow {
  std::size_t candidates = 0;
  std::size_t pruned = 0;
  std::size_t generated = 0;
  std::size_t killed = 0;
  std::size_t survived = 0;
  std::size_t invalid = 0;
  std::size_t timeouts = 0;

  std::optional<double> Score() const {
    if (killed + survived == 0) return std::nullopt;
    return static_cast<double>(killed) / static_cast<double>(killed + survived);
  }
};

struct MutantInfo {
  const CandidateRecord* candidate = nullptr;
  const json* applied = nullptr;
  const std::string* diff = nullptr;
  const std::string* detail = nullptr;
};

std::map<std::string, MutantInfo> IndexMutants(const MutationBatch& batch) {
  std::map<std::string, MutantInfo> out;
  for (const Mutant& m : batch.mutants) {
    out[m.id] = MutantInfo{&m.candidate, &m.applied, &m.diff, nullptr};
  }
  for (const InvalidMutant& m : batch.invalid) {
    out[m.id] = MutantInfo{&m.candidate, &m.applied, nullptr, &m.detail};
  }
  return out;
}

std::map<Operator, OperatorRow> OperatorRows(const RunResult& run) {
  std::map<Operator, OperatorRow> rows;
  for (Operator op : kAllOperators) rows[op];
  for (const CandidateRecord& c : run.candidates) ++rows[c.label].candidates;
  for (const DroppedCandidate& d : run.pruned.dropped) {
    ++rows[d.candidate.label].pruned;
  }
  const auto index = IndexMutants(run.batch);
  for (const auto& [id, info] : index) ++rows[info.candidate->label].generated;
  for (const MutantOutcome& o : run.campaign.outcomes) {
    OperatorRow& row = rows[index.at(o.mutant_id).candidate->label];
    switch (o.status) {
      case MutantStatus::kKilled:
        ++row.killed;
        if (o.timed_out) ++row.timeouts;
        break;
      case MutantStatus::kSurvived: ++row.survived; break;
      default: ++row.invalid; break;
    }
  }
  return rows;
}

json ScoreJson(const std::optional<double>& score) {
  return score ? json(*score) : json("NA");
}

std::string Fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::string Code(const std::string& s) { return "`" + s + "`"; }

}  // namespace

std::string FormatScore(const std::optional<double>& score) {
  return score ? Fixed(*score * 100.0, 2) : "NA";
}

json ReportToJson(const RunResult& run) {
  const auto index = IndexMutants(run.batch);
  const auto rows = OperatorRows(run);

  OperatorRow total;
  for (const auto& [op, row] : rows) {
    total.candidates += row.candidates;
    total.pruned += row.pruned;
    total.generated += row.generated;
    total.killed += row.killed;
    total.survived += row.survived;
    total.invalid += row.invalid;
    total.timeouts += row.timeouts;
  }
  std::size_t invalid_syntactic = 0;
  std::size_t invalid_runtime = 0;
  json outcomes = json::array();
  json survivors = json::array();
  json invalid = json::array();
  for (const MutantOutcome& o : run.campaign.outcomes) {
    const MutantInfo& info = index.at(o.mutant_id);
    json entry = OutcomeToJson(o, false);
    entry["operator"] = OperatorLabel(info.candidate->label);
    entry["loc"] = info.candidate->loc;
    entry["applied"] = *info.applied;
    outcomes.push_back(entry);
    if (o.status == MutantStatus::kSurvived) {
      survivors.push_back({{"mutant_id", o.mutant_id},
                           {"operator", OperatorLabel(info.candidate->label)},
                           {"loc", info.candidate->loc},
                           {"diff", *info.diff}});
    } else if (o.status == MutantStatus::kInvalidSyntactic ||
               o.status == MutantStatus::kInvalidRuntime) {
      (o.status == MutantStatus::kInvalidSyntactic ? invalid_syntactic
                                                   : invalid_runtime)++;
      invalid.push_back({{"mutant_id", o.mutant_id},
                         {"operator", OperatorLabel(info.candidate->label)},
                         {"loc", info.candidate->loc},
                         {"status", StatusName(o.status)},
                         {"failure_signature", o.failure_signature},
                         {"detail", info.detail ? *info.detail : ""}});
    }
  }

  json operators = json::array();
  for (Operator op : kAllOperators) {
    const OperatorRow& row = rows.at(op);
    operators.push_back({{"operator", OperatorLabel(op)},
                         {"candidates", row.candidates},
                         {"pruned", row.pruned},
                         {"generated", row.generated},
                         {"mutants", row.killed + row.survived},
                         {"killed", row.killed},
                         {"survived", row.survived},
                         {"invalid", row.invalid},
                         {"timeouts", row.timeouts},
                         {"score", ScoreJson(row.Score())}});
  }
  json dropped = json::array();
  for (const DroppedCandidate& d : run.pruned.dropped) {
    dropped.push_back(
        {{"candidate", CandidateToJson(d.candidate)}, {"reason", d.reason}});
  }
  json unparsed = json::array();
  for (const UnparsedFile& u : run.unparsed) {
    unparsed.push_back({{"file", u.file}, {"error", u.error}});
  }
  const Config& c = run.config;
  return json{
      {"schema_version", kRunSchemaVersion},
      {"tool", "pyfault"},
      {"options",
       {{"seed", c.seed},
        {"sample_ratio", c.sample_ratio},
        {"exhaustive_conditions", c.exhaustive_conditions},
        {"include_asserts", c.include_asserts},
        {"static_only", c.static_only},
        {"timeout_factor", c.timeout_factor},
        {"timeout_min_seconds", c.timeout_min_seconds},
        {"conversion_functions", c.conversion_functions}}},
      {"files", run.files},
      {"unparsed_files", unparsed},
      {"trace", {{"events", run.trace_stats.events},
                 {"malformed", run.trace_stats.malformed}}},
      {"pruning_skipped", run.pruning_skipped},
      {"inventory", run.campaign.baseline.inventory},
      {"summary",
       {{"candidates", total.candidates},
        {"pruned", total.pruned},
        {"generated", total.generated},
        {"unsampled", run.campaign.unsampled.size()},
        {"mutants", total.killed + total.survived},
        {"killed", total.killed},
        {"survived", total.survived},
        {"timeouts", total.timeouts},
        {"invalid_syntactic", invalid_syntactic},
        {"invalid_runtime", invalid_runtime},
        {"score", ScoreJson(MutationScore(run.campaign.outcomes))}}},
      {"operators", operators},
      {"outcomes", outcomes},
      {"survivors", survivors},
      {"invalid", invalid},
      {"dropped", dropped},
      {"unsampled", run.campaign.unsampled},
  };
}

json TimingsToJson(const PhaseTimings& t) {
  return json{{"identify", t.identify},
              {"mutate_and_test", t.mutate_and_test},
              {"post_process", t.post_process}};
}

std::string ReportToMarkdown(const RunResult& run) {
  const json r = ReportToJson(run);
  const json& s = r["summary"];
  auto score_text = [](const json& score) {
    return score.is_string() ? std::string("NA")
                             : FormatScore(score.get<double>());
  };
  std::string md = "# pyfault report\n\n";
  md += "Seed " + std::to_string(run.config.seed) + ", " +
        std::to_string(r["inventory"].size()) + " tests, " +
        std::to_string(run.files.size()) + " files scanned.\n\n";
  md += "Mutation score: **" + score_text(s["score"]) + "**";
  md += s["score"].is_string() ? "" : std::string("%");
  md += " (" + s["killed"].dump() + " killed, " + s["survived"].dump() +
        " survived, " + s["timeouts"].dump() + " by timeout).\n\n";

  md += "## Operators\n\n";
  md += "| Operator | # Mutants | Score (%) | Killed | Survived | Invalid | "
        "Candidates | Pruned |\n";
  md += "|---|---:|---:|---:|---:|---:|---:|---:|\n";
  for (const json& row : r["operators"]) {
    md += "| " + row["operator"].get<std::string>() + " | " +
          row["mutants"].dump() + " | " + score_text(row["score"]) + " | " +
          row["killed"].dump() + " | " + row["survived"].dump() + " | " +
          row["invalid"].dump() + " | " + row["candidates"].dump() + " | " +
          row["pruned"].dump() + " |\n";
  }

  md += "\n## Phase timings\n\n| Phase | Seconds |\n|---|---:|\n";
  md += "| identify | " + Fixed(run.timings.identify, 2) + " |\n";
  md += "| mutate + test | " + Fixed(run.timings.mutate_and_test, 2) + " |\n";
  md += "| post-process | " + Fixed(run.timings.post_process, 2) + " |\n";

  md += "\n## Survivors\n\n";
  if (r["survivors"].empty()) md += "None.\n";
  for (const json& m : r["survivors"]) {
    const SourceLocation loc = m["loc"].get<SourceLocation>();
    md += "### " + m["operator"].get<std::string>() + " " +
          Code(m["mutant_id"].get<std::string>()) + " at " +
          Code(loc.ToString()) + "\n\n```diff\n" +
          m["diff"].get<std::string>() + "```\n\n";
  }

  md += "## Invalid mutants\n\n";
  if (r["invalid"].empty()) {
    md += "None.\n";
  } else {
    md += "| Mutant | Operator | Location | Status | Signature |\n"
          "|---|---|---|---|---|\n";
    for (const json& m : r["invalid"]) {
      md += "| " + Code(m["mutant_id"].get<std::string>()) + " | " +
            m["operator"].get<std::string>() + " | " +
            Code(m["loc"].get<SourceLocation>().ToString()) + " | " +
            m["status"].get<std::string>() + " | " +
            m["failure_signature"].get<std::string>() + " |\n";
    }
  }

  md += "\n## Dropped candidates\n\n";
  if (run.pruning_skipped) md += "Pruning skipped: no coverage data.\n\n";
  if (run.pruned.dropped.empty()) {
    md += "None.\n";
  } else {
    md += "| Operator | Location | Reason |\n|---|---|---|\n";
    for (const DroppedCandidate& d : run.pruned.dropped) {
      md += "| " + std::string(OperatorLabel(d.candidate.label)) + " | " +
            Code(d.candidate.loc.ToString()) + " | " + d.reason + " |\n";
    }
  }
  if (!run.unparsed.empty()) {
    md += "\n## Unparsed files\n\n";
    for (const UnparsedFile& u : run.unparsed) {
      md += "- " + Code(u.file) + ": " + u.error + "\n";
    }
  }
  return md;
}

void WriteReports(const RunResult& run, const RunPaths& paths) {
  auto write = [](const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path);
    out << text;
  };
  write(paths.report_json, ReportToJson(run).dump(1) + "\n");
  write(paths.report_md, ReportToMarkdown(run));
  write(paths.timings, TimingsToJson(run.timings).dump(1) + "\n");
}

std::string ComparisonToMarkdown(const Comparison& c) {
  auto pct = [](const std::optional<double>& v) {
    return v ? Fixed(*v, 2) : std::string("NA");
  };
  auto num = [](const std::optional<double>& v, int digits) {
    return v ? Fixed(*v, digits) : std::string("undefined");
  };
  auto ratio = [](const Ratio& r) {
    return Fixed(r.value, 2) + (r.zero_denominator ? " (empty denominator)" : "");
  };
  const std::string a = c.tool_a.empty() ? "A" : c.tool_a;
  const std::string b = c.tool_b.empty() ? "B" : c.tool_b;
  std::string md = "# Kill matrix comparison: " + a + " vs " + b + "\n\n";
  md += "| Tool | Mutants | Killed | Unique (%) | Subsumed (%) | "
        "Unique survivors |\n|---|---:|---:|---:|---:|---:|\n";
  for (const auto& [name, u] : {std::pair{a, c.unique_a}, std::pair{b, c.unique_b}}) {
    md += "| " + name + " | " + std::to_string(u.mutants) + " | " +
          std::to_string(u.killed) + " | " + pct(u.unique_percent) + " | " +
          pct(u.subsumed_percent) + " | " + std::to_string(u.unique_survivors) +
          " |\n";
  }
  md += "\n| Metric | Value |\n|---|---:|\n";
  md += "| Cross-kill rate (equal kill sets) | " + ratio(c.cross_kill_strict) + " |\n";
  md += "| Cross-kill rate (one-way subsumption) | " +
        ratio(c.cross_kill_relaxed) + " |\n";
  md += "| Test overlap ratio | " + ratio(c.test_overlap) + " |\n";
  const Association& s = c.association;
  md += "| Pearson r (p) | " + num(s.pearson.r, 3) + " (" +
        num(s.pearson.p_value, 3) + ") |\n";
  md += "| Spearman rho (p) | " + num(s.spearman.r, 3) + " (" +
        num(s.spearman.p_value, 3) + ") |\n";
  md += "| Cramer's V (p) | " + num(s.chi_square.cramers_v, 3) + " (" +
        num(s.chi_square.p_value, 3) + ") |\n";
  md += "| Subsumption edges | " + std::to_string(c.graph.edges.size()) + " |\n";
  return md;
}

}  // namespace pyfault
