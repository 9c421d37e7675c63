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

#include <string>

namespace pyfault {
namespace {

bool IsNot(const Node& n) {
  return n.kind == NodeKind::kUnaryOp && n.text == "not";
}

bool IsConnective(const Node& n) {
  return n.kind == NodeKind::kBoolOp || IsNot(n);
}

// Appends the leaves under `id` and returns its shape.
std::string Flatten(const SyntaxTree& tree, NodeId id,
                    std::vector<NodeId>* leaves) {
  const Node& n = tree.node(id);
  if (!IsConnective(n)) {
    leaves->push_back(id);
    return "#" + std::to_string(leaves->size() - 1);
  }
  std::string shape = n.text + "(";
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    if (i > 0) shape += ",";
    shape += Flatten(tree, n.children[i], leaves);
  }
  return shape + ")";
}

std::string ConditionContext(const SyntaxTree& tree, NodeId op) {
  const Node& n = tree.node(op);
  if (n.parent == kNoNode) return "expression";
  const Node& parent = tree.node(n.parent);
  if (parent.kind == NodeKind::kIf && parent.children.front() == op) {
    return "if";
  }
  if (parent.kind == NodeKind::kWhile && parent.children.front() == op) {
    return "while";
  }
  if (parent.kind == NodeKind::kIfExp && parent.children[1] == op) {
    return "ifexp";
  }
  return "expression";
}

const char* ContainerName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kList: return "list";
    case NodeKind::kTuple: return "tuple";
    case NodeKind::kSet: return "set";
    default: return "dict";
  }
}

}  // namespace

std::vector<NodeId> ConditionOperands(const SyntaxTree& tree, NodeId op) {
  std::vector<NodeId> leaves;
  Flatten(tree, op, &leaves);
  return leaves;
}

bool IsOutermostBoolOp(const SyntaxTree& tree, NodeId op) {
  if (tree.node(op).kind != NodeKind::kBoolOp) return false;
  for (NodeId p = tree.node(op).parent; p != kNoNode; p = tree.node(p).parent) {
    const Node& n = tree.node(p);
    if (n.kind == NodeKind::kBoolOp) return false;
    if (!IsNot(n)) return true;
  }
  return true;
}

std::vector<CandidateRecord> ScanContainers(const SyntaxTree& tree) {
  std::vector<CandidateRecord> out;
  tree.Walk([&](NodeId id) {
    const Node& n = tree.node(id);
    if (!InCategory(n.kind, NodeCategory::kContainerLiteral) ||
        n.children.empty()) {
      return true;
    }
    RemElContMeta meta;
    meta.container = ContainerName(n.kind);
    meta.element_count = static_cast<int>(n.children.size());
    if (n.kind == NodeKind::kDict) {
      int key = 0;
      int value = 0;
      for (NodeId item : n.children) {
        std::optional<int> key_index;
        if (tree.node(item).text != "**") key_index = key++;
        meta.key_value_pairs.emplace_back(key_index, value++);
      }
    }
    out.push_back(
        CandidateRecord{Operator::kRemElCont, tree.ToLocation(n.span), meta});
    return true;
  });
  return out;
}

std::vector<CandidateRecord> ScanConditions(const SyntaxTree& tree,
                                            const StaticScanOptions& options) {
  std::vector<CandidateRecord> out;
  tree.Walk([&](NodeId id) {
    const Node& n = tree.node(id);
    if (n.kind == NodeKind::kAssert && !options.include_asserts) return false;
    if (n.kind != NodeKind::kBoolOp || !IsOutermostBoolOp(tree, id)) {
      return true;
    }
    RemExpCondMeta meta;
    std::vector<NodeId> leaves;
    meta.structure = Flatten(tree, id, &leaves);
    meta.operand_count = static_cast<int>(leaves.size());
    for (NodeId leaf : leaves) {
      meta.operands.push_back(tree.ToLocation(tree.node(leaf).span));
    }
    meta.context = ConditionContext(tree, id);
    out.push_back(
        CandidateRecord{Operator::kRemExpCond, tree.ToLocation(n.span), meta});
    return true;
  });
  return out;
}

}  // namespace pyfault
