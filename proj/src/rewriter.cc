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

#include "pyfault/rewriter.h"

#include <algorithm>
#include <string>
#include <vector>

#include "pyfault/errors.h"

namespace pyfault {
namespace {

bool IsParenthesizedTuple(const SyntaxTree& tree, NodeId id) {
  const Node& n = tree.node(id);
  return n.kind == NodeKind::kTuple && n.span.size() >= 2 &&
         tree.text()[n.span.begin] == '(';
}

// Nodes whose source can stand anywhere an operand is expected.
bool IsAtomic(const SyntaxTree& tree, NodeId id) {
  const Node& n = tree.node(id);
  if (n.outer != n.span) return true;
  switch (n.kind) {
    case NodeKind::kName:
    case NodeKind::kConstant:
    case NodeKind::kList:
    case NodeKind::kSet:
    case NodeKind::kDict:
    case NodeKind::kListComp:
    case NodeKind::kSetComp:
    case NodeKind::kDictComp:
    case NodeKind::kCall:
    case NodeKind::kAttribute:
    case NodeKind::kSubscript:
      return true;
    case NodeKind::kTuple:
      return IsParenthesizedTuple(tree, id);
    case NodeKind::kGeneratorExp:
      // A sole call argument shares the call's parentheses.
      return tree.text()[n.span.begin] == '(';
    default:
      return false;
  }
}

// True when `target` sits in a slot that accepts any plain expression.
bool InFreeSlot(const SyntaxTree& tree, NodeId target) {
  const Node& n = tree.node(target);
  if (n.outer != n.span || n.parent == kNoNode) return true;
  const Node& parent = tree.node(n.parent);
  switch (parent.kind) {
    case NodeKind::kExprStmt:
    case NodeKind::kAssign:
    case NodeKind::kAugAssign:
    case NodeKind::kAnnAssign:
    case NodeKind::kReturn:
    case NodeKind::kKeyword:
    case NodeKind::kDictItem:
    case NodeKind::kList:
    case NodeKind::kSet:
      return true;
    case NodeKind::kCall:
      return parent.children.front() != target;
    case NodeKind::kSubscript:
      return parent.children.front() != target;
    default:
      return false;
  }
}

std::vector<NodeId> SequenceElements(const SyntaxTree& tree, NodeId id) {
  const Node& n = tree.node(id);
  switch (n.kind) {
    case NodeKind::kCall:
      return std::vector<NodeId>(n.children.begin() + 1, n.children.end());
    case NodeKind::kList:
    case NodeKind::kTuple:
    case NodeKind::kSet:
    case NodeKind::kDict:
      return n.children;
    default:
      throw SerializationError(std::string(NodeKindName(n.kind)) +
                               " node has no removable elements");
  }
}

// Whether a comma follows the element ending at `from` before `to`,
// ignoring comments.
bool CommaBetween(const std::string& text, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    if (text[i] == '#') {
      while (i < to && text[i] != '\n') ++i;
    } else if (text[i] == ',') {
      return true;
    }
  }
  return false;
}

}  // namespace

std::string ApplyEdit(std::string_view text, const TextEdit& edit) {
  std::string out;
  out.reserve(text.size() + edit.replacement.size());
  out.append(text.substr(0, edit.span.begin));
  out.append(edit.replacement);
  out.append(text.substr(edit.span.end));
  return out;
}

TextEdit ReplaceWithDescendant(const SyntaxTree& tree, NodeId target,
                               NodeId replacement) {
  const Node& t = tree.node(target);
  if (replacement == target) {
    return TextEdit{t.span, std::string(tree.TextOf(t.span))};
  }
  NodeId p = tree.node(replacement).parent;
  while (p != kNoNode && p != target) p = tree.node(p).parent;
  if (p != target) {
    throw SerializationError("replacement is not inside the rewritten node");
  }
  const Node& r = tree.node(replacement);
  std::string text(tree.TextOf(r.outer));
  const bool bare_tuple =
      r.kind == NodeKind::kTuple && !IsParenthesizedTuple(tree, replacement);
  const bool unsafe_anywhere =
      bare_tuple || r.kind == NodeKind::kGeneratorExp ||
      r.kind == NodeKind::kNamedExpr ||
      r.kind == NodeKind::kYield || r.kind == NodeKind::kYieldFrom;
  if (r.kind == NodeKind::kStarred) {
    throw SerializationError("a starred expression cannot replace " +
                             std::string(NodeKindName(t.kind)));
  }
  if (!IsAtomic(tree, replacement) &&
      (unsafe_anywhere || !InFreeSlot(tree, target))) {
    text = "(" + text + ")";
  }
  return TextEdit{t.span, std::move(text)};
}

TextEdit ReplaceAttributeName(const SyntaxTree& tree, NodeId attribute,
                              std::string_view name) {
  const Node& n = tree.node(attribute);
  if (n.kind != NodeKind::kAttribute) {
    throw SerializationError("not an attribute access");
  }
  return TextEdit{n.name_span, std::string(name)};
}

TextEdit RemoveFromSequence(const SyntaxTree& tree, NodeId sequence,
                            std::size_t index) {
  const Node& seq = tree.node(sequence);
  const std::vector<NodeId> elems = SequenceElements(tree, sequence);
  if (index >= elems.size()) {
    throw SerializationError("element index " + std::to_string(index) +
                             " out of range for " +
                             std::to_string(elems.size()) + " elements");
  }
  const std::string& text = tree.text();
  auto outer = [&](std::size_t i) { return tree.node(elems[i]).outer; };
  const std::size_t n = elems.size();

  if (n == 1) {
    if (seq.kind == NodeKind::kCall) {
      // Drop the argument together with any trailing comma.
      return TextEdit{Span{outer(0).begin, seq.span.end - 1}, ""};
    }
    std::string empty;
    switch (seq.kind) {
      case NodeKind::kList: empty = "[]"; break;
      case NodeKind::kDict: empty = "{}"; break;
      case NodeKind::kSet: empty = "set()"; break;
      default: empty = "()"; break;
    }
    return TextEdit{seq.span, empty};
  }

  // A tuple reduced to one element must keep a trailing comma.
  bool need_comma = false;
  if (seq.kind == NodeKind::kTuple && n == 2) {
    const std::size_t close = IsParenthesizedTuple(tree, sequence)
                                  ? seq.span.end - 1
                                  : seq.span.end;
    need_comma = !CommaBetween(text, outer(1).end, close);
  }

  if (index + 1 < n) {
    if (need_comma) {
      return TextEdit{Span{outer(index).begin, outer(index + 1).end},
                      std::string(tree.TextOf(outer(index + 1))) + ","};
    }
    return TextEdit{Span{outer(index).begin, outer(index + 1).begin}, ""};
  }
  return TextEdit{Span{outer(index - 1).end, outer(index).end},
                  need_comma ? "," : ""};
}

TextEdit RemoveOperand(const SyntaxTree& tree, NodeId op, NodeId operand) {
  const Node& n = tree.node(op);
  if (n.kind != NodeKind::kBoolOp) {
    throw SerializationError("not a boolean operation");
  }
  const auto it = std::find(n.children.begin(), n.children.end(), operand);
  if (it == n.children.end()) {
    throw SerializationError("operand does not belong to the operation");
  }
  const std::size_t i = static_cast<std::size_t>(it - n.children.begin());
  auto outer = [&](std::size_t k) { return tree.node(n.children[k]).outer; };
  if (i + 1 < n.children.size()) {
    return TextEdit{Span{outer(i).begin, outer(i + 1).begin}, ""};
  }
  return TextEdit{Span{outer(i - 1).end, outer(i).end}, ""};
}

std::string Rewrite(const SyntaxTree& tree, const TextEdit& edit) {
  std::string out = ApplyEdit(tree.text(), edit);
  try {
    Parse(out, tree.path());
  } catch (const ParseError& e) {
    throw SerializationError("rewritten text does not parse: " +
                             std::string(e.what()));
  }
  return out;
}

}  // namespace pyfault
