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

#include "pyfault/mutator.h"

#include <algorithm>
#include <variant>

#include "pyfault/errors.h"
#include "pyfault/hashing.h"
#include "pyfault/rewriter.h"
#include "pyfault/static_scan.h"

namespace pyfault {

using nlohmann::json;

namespace {

std::vector<NodeId> CallArguments(const SyntaxTree& tree, NodeId call) {
  const auto& children = tree.node(call).children;
  return std::vector<NodeId>(children.begin() + 1, children.end());
}

TextEdit RemFuncArgEdit(const SyntaxTree& tree, NodeId call,
                        const RemFuncArgMeta& meta) {
  const std::vector<NodeId> args = CallArguments(tree, call);
  int index = meta.arg_index;
  if (index < 0 || static_cast<std::size_t>(index) >= args.size()) {
    throw NodeNotFound("call has no argument " + std::to_string(index));
  }
  const Node& arg = tree.node(args[index]);
  const bool keyword_arg = arg.kind == NodeKind::kKeyword && !arg.text.empty();
  if (meta.reason != "extra_positional" && meta.arg_name && keyword_arg &&
      arg.text != *meta.arg_name) {
    // The recorded index is stale; fall back to the keyword name.
    std::vector<int> matches;
    for (std::size_t i = 0; i < args.size(); ++i) {
      const Node& a = tree.node(args[i]);
      if (a.kind == NodeKind::kKeyword && a.text == *meta.arg_name) {
        matches.push_back(static_cast<int>(i));
      }
    }
    if (matches.size() != 1) {
      throw AmbiguousTarget("argument '" + *meta.arg_name +
                            "' does not match the call site");
    }
    index = matches.front();
  }
  return RemoveFromSequence(tree, call, static_cast<std::size_t>(index));
}

TextEdit RemConvFuncEdit(const SyntaxTree& tree, NodeId call,
                         const RemConvFuncMeta& meta) {
  const Node& func = tree.node(tree.node(call).children.front());
  if (func.kind != NodeKind::kName || func.text != meta.function) {
    throw AmbiguousTarget("call at site is not '" + meta.function + "'");
  }
  for (NodeId arg : CallArguments(tree, call)) {
    const NodeKind kind = tree.node(arg).kind;
    if (kind != NodeKind::kKeyword && kind != NodeKind::kStarred) {
      return ReplaceWithDescendant(tree, call, arg);
    }
  }
  throw SerializationError("conversion call has no positional argument");
}

TextEdit RemExpCondEdit(const SyntaxTree& tree, NodeId op, int operand) {
  const std::vector<NodeId> leaves = ConditionOperands(tree, op);
  if (operand < 0 || static_cast<std::size_t>(operand) >= leaves.size()) {
    throw NodeNotFound("condition has no operand " + std::to_string(operand));
  }
  NodeId unit = leaves[operand];
  while (tree.node(tree.node(unit).parent).kind == NodeKind::kUnaryOp &&
         tree.node(tree.node(unit).parent).text == "not") {
    unit = tree.node(unit).parent;
  }
  return RemoveOperand(tree, tree.node(unit).parent, unit);
}

NodeId RequireAttribute(const SyntaxTree& tree, const CandidateRecord& c,
                        const std::string& name) {
  const NodeId id = Locate(tree, c.loc, NodeCategory::kAttributeAccess);
  if (tree.node(id).text != name) {
    throw AmbiguousTarget("attribute at site is '" + tree.node(id).text +
                          "', expected '" + name + "'");
  }
  return id;
}

TextEdit EditFor(const CandidateRecord& c, const SyntaxTree& tree,
                 const MutationChoice& choice) {
  const NodeId target = Locate(tree, c.loc, TargetCategory(c.label));
  switch (c.label) {
    case Operator::kRemFuncArg:
      return RemFuncArgEdit(tree, target, std::get<RemFuncArgMeta>(c.metadata));
    case Operator::kRemConvFunc:
      return RemConvFuncEdit(tree, target,
                             std::get<RemConvFuncMeta>(c.metadata));
    case Operator::kRemElCont: {
      const int index = choice.element_index.value_or(0);
      if (index < 0) throw NodeNotFound("negative element index");
      return RemoveFromSequence(tree, target, static_cast<std::size_t>(index));
    }
    case Operator::kRemExpCond:
      return RemExpCondEdit(tree, target, choice.operand_index.value_or(0));
    case Operator::kChUsedAttr: {
      const auto& meta = std::get<ChUsedAttrMeta>(c.metadata);
      const NodeId attr = RequireAttribute(tree, c, meta.attribute);
      if (meta.alternate.empty() || meta.alternate == meta.attribute) {
        throw SerializationError("alternate attribute equals the original");
      }
      return ReplaceAttributeName(tree, attr, meta.alternate);
    }
    case Operator::kRemAttrAcc: {
      const auto& meta = std::get<RemAttrAccMeta>(c.metadata);
      const NodeId attr = RequireAttribute(tree, c, meta.attribute);
      return ReplaceWithDescendant(tree, attr, tree.node(attr).children[0]);
    }
    case Operator::kRemMetCall: {
      const auto& meta = std::get<RemMetCallMeta>(c.metadata);
      const NodeId func = tree.node(target).children.front();
      const Node& f = tree.node(func);
      if (f.kind != NodeKind::kAttribute || f.text != meta.method) {
        throw AmbiguousTarget("call at site is not a call of method '" +
                              meta.method + "'");
      }
      return ReplaceWithDescendant(tree, target, f.children[0]);
    }
  }
  throw SerializationError("unknown operator");
}

std::vector<std::string> SplitLines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string::npos) nl = text.size() - 1;
    lines.push_back(text.substr(start, nl - start + 1));
    start = nl + 1;
  }
  return lines;
}

void AppendDiffLine(char tag, const std::string& line, std::string* out) {
  out->push_back(tag);
  out->append(line);
  if (line.empty() || line.back() != '\n') {
    out->append("\n\\ No newline at end of file\n");
  }
}

std::string HunkRange(std::size_t start, std::size_t length) {
  // An empty range names the line before it.
  const std::size_t first = length == 0 ? start : start + 1;
  return std::to_string(first) + "," + std::to_string(length);
}

}  // namespace

std::vector<MutationChoice> ChoicesFor(const CandidateRecord& candidate,
                                       const MutationOptions& options) {
  if (const auto* m = std::get_if<RemElContMeta>(&candidate.metadata)) {
    std::mt19937_64 engine =
        KeyedEngine(options.seed, "RemElCont|" + candidate.loc.ToString());
    MutationChoice choice;
    choice.element_index = static_cast<int>(
        PickIndex(engine, static_cast<std::size_t>(std::max(1, m->element_count))));
    return {choice};
  }
  if (const auto* m = std::get_if<RemExpCondMeta>(&candidate.metadata)) {
    std::vector<MutationChoice> choices;
    const int count = options.exhaustive_conditions ? m->operand_count : 1;
    for (int i = 0; i < count; ++i) {
      MutationChoice choice;
      choice.operand_index = i;
      choices.push_back(choice);
    }
    return choices;
  }
  return {MutationChoice{}};
}

json ChoiceToJson(const MutationChoice& choice) {
  json j = json::object();
  if (choice.element_index) j["element_index"] = *choice.element_index;
  if (choice.operand_index) j["operand_index"] = *choice.operand_index;
  return j;
}

std::string MutantId(const CandidateRecord& candidate, const json& applied) {
  json key = CandidateToJson(candidate);
  key["applied"] = applied;
  return HexDigest(Fnv1a64(key.dump()));
}

Mutant Mutate(const CandidateRecord& candidate, const SyntaxTree& tree,
              const MutationChoice& choice) {
  if (candidate.loc.file != tree.path()) {
    throw NodeNotFound("candidate names " + candidate.loc.file +
                       " but the tree is " + tree.path());
  }
  const TextEdit edit = EditFor(candidate, tree, choice);
  Mutant m;
  m.candidate = candidate;
  m.applied = ChoiceToJson(choice);
  m.id = MutantId(candidate, m.applied);
  m.site = tree.ToLocation(edit.span);
  m.original_span_text = std::string(tree.TextOf(edit.span));
  m.mutated_span_text = edit.replacement;
  if (m.original_span_text == m.mutated_span_text) {
    throw SerializationError("mutation leaves the source unchanged");
  }
  m.mutated_text = Rewrite(tree, edit);
  m.diff = UnifiedDiff(tree.path(), tree.text(), m.mutated_text);
  return m;
}

MutationBatch GenerateMutants(const std::vector<CandidateRecord>& candidates,
                              const std::map<std::string, SyntaxTree>& trees,
                              const MutationOptions& options) {
  MutationBatch batch;
  for (const CandidateRecord& c : candidates) {
    for (const MutationChoice& choice : ChoicesFor(c, options)) {
      InvalidMutant invalid;
      invalid.candidate = c;
      invalid.applied = ChoiceToJson(choice);
      invalid.id = MutantId(c, invalid.applied);
      auto it = trees.find(c.loc.file);
      if (it == trees.end()) {
        invalid.failure_signature = "NodeNotFound";
        invalid.detail = "file " + c.loc.file + " is not available";
        batch.invalid.push_back(std::move(invalid));
        continue;
      }
      try {
        batch.mutants.push_back(Mutate(c, it->second, choice));
      } catch (const NodeNotFound& e) {
        invalid.failure_signature = "NodeNotFound";
        invalid.detail = e.what();
        batch.invalid.push_back(std::move(invalid));
      } catch (const AmbiguousTarget& e) {
        invalid.failure_signature = "AmbiguousTarget";
        invalid.detail = e.what();
        batch.invalid.push_back(std::move(invalid));
      } catch (const SerializationError& e) {
        invalid.failure_signature = "SerializationError";
        invalid.detail = e.what();
        batch.invalid.push_back(std::move(invalid));
      }
    }
  }
  auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
  std::sort(batch.mutants.begin(), batch.mutants.end(), by_id);
  std::sort(batch.invalid.begin(), batch.invalid.end(), by_id);
  return batch;
}

std::string UnifiedDiff(const std::string& path, const std::string& before,
                        const std::string& after) {
  const std::vector<std::string> a = SplitLines(before);
  const std::vector<std::string> b = SplitLines(after);
  std::size_t prefix = 0;
  while (prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) {
    ++prefix;
  }
  std::size_t suffix = 0;
  while (suffix < a.size() - prefix && suffix < b.size() - prefix &&
         a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix]) {
    ++suffix;
  }
  if (prefix == a.size() && prefix == b.size()) return "";
  constexpr std::size_t kContext = 3;
  const std::size_t start = prefix > kContext ? prefix - kContext : 0;
  const std::size_t a_changed_end = a.size() - suffix;
  const std::size_t b_changed_end = b.size() - suffix;
  const std::size_t trailing = std::min(kContext, suffix);
  const std::size_t a_end = a_changed_end + trailing;
  const std::size_t b_end = b_changed_end + trailing;

  std::string out = "--- a/" + path + "\n+++ b/" + path + "\n";
  out += "@@ -" + HunkRange(start, a_end - start) + " +" +
         HunkRange(start, b_end - start) + " @@\n";
  for (std::size_t i = start; i < prefix; ++i) AppendDiffLine(' ', a[i], &out);
  for (std::size_t i = prefix; i < a_changed_end; ++i) {
    AppendDiffLine('-', a[i], &out);
  }
  for (std::size_t i = prefix; i < b_changed_end; ++i) {
    AppendDiffLine('+', b[i], &out);
  }
  for (std::size_t i = a_changed_end; i < a_end; ++i) {
    AppendDiffLine(' ', a[i], &out);
  }
  return out;
}

}  // namespace pyfault
