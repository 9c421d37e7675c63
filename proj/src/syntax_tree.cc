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

#include "pyfault/syntax_tree.h"

#include <algorithm>
#include <string>
#include <utility>

#include "pyfault/errors.h"

namespace pyfault {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kModule: return "Module";
    case NodeKind::kExprStmt: return "Expr";
    case NodeKind::kAssign: return "Assign";
    case NodeKind::kAugAssign: return "AugAssign";
    case NodeKind::kAnnAssign: return "AnnAssign";
    case NodeKind::kReturn: return "Return";
    case NodeKind::kPass: return "Pass";
    case NodeKind::kBreak: return "Break";
    case NodeKind::kContinue: return "Continue";
    case NodeKind::kDelete: return "Delete";
    case NodeKind::kRaise: return "Raise";
    case NodeKind::kGlobal: return "Global";
    case NodeKind::kNonlocal: return "Nonlocal";
    case NodeKind::kImport: return "Import";
    case NodeKind::kImportFrom: return "ImportFrom";
    case NodeKind::kAssert: return "Assert";
    case NodeKind::kIf: return "If";
    case NodeKind::kWhile: return "While";
    case NodeKind::kFor: return "For";
    case NodeKind::kWith: return "With";
    case NodeKind::kWithItem: return "WithItem";
    case NodeKind::kTry: return "Try";
    case NodeKind::kExceptHandler: return "ExceptHandler";
    case NodeKind::kFunctionDef: return "FunctionDef";
    case NodeKind::kClassDef: return "ClassDef";
    case NodeKind::kDecorator: return "Decorator";
    case NodeKind::kArg: return "Arg";
    case NodeKind::kName: return "Name";
    case NodeKind::kConstant: return "Constant";
    case NodeKind::kList: return "List";
    case NodeKind::kTuple: return "Tuple";
    case NodeKind::kSet: return "Set";
    case NodeKind::kDict: return "Dict";
    case NodeKind::kDictItem: return "DictItem";
    case NodeKind::kListComp: return "ListComp";
    case NodeKind::kSetComp: return "SetComp";
    case NodeKind::kDictComp: return "DictComp";
    case NodeKind::kGeneratorExp: return "GeneratorExp";
    case NodeKind::kComprehension: return "Comprehension";
    case NodeKind::kBoolOp: return "BoolOp";
    case NodeKind::kUnaryOp: return "UnaryOp";
    case NodeKind::kBinOp: return "BinOp";
    case NodeKind::kCompare: return "Compare";
    case NodeKind::kIfExp: return "IfExp";
    case NodeKind::kLambda: return "Lambda";
    case NodeKind::kNamedExpr: return "NamedExpr";
    case NodeKind::kCall: return "Call";
    case NodeKind::kKeyword: return "Keyword";
    case NodeKind::kAttribute: return "Attribute";
    case NodeKind::kSubscript: return "Subscript";
    case NodeKind::kSlice: return "Slice";
    case NodeKind::kStarred: return "Starred";
    case NodeKind::kAwait: return "Await";
    case NodeKind::kYield: return "Yield";
    case NodeKind::kYieldFrom: return "YieldFrom";
  }
  return "?";
}

bool InCategory(NodeKind kind, NodeCategory category) {
  switch (category) {
    case NodeCategory::kAny:
      return true;
    case NodeCategory::kContainerLiteral:
      return kind == NodeKind::kList || kind == NodeKind::kTuple ||
             kind == NodeKind::kSet || kind == NodeKind::kDict;
    case NodeCategory::kBoolOp:
      return kind == NodeKind::kBoolOp;
    case NodeCategory::kCall:
      return kind == NodeKind::kCall;
    case NodeCategory::kAttributeAccess:
      return kind == NodeKind::kAttribute;
    case NodeCategory::kConditional:
      return kind == NodeKind::kIf || kind == NodeKind::kWhile ||
             kind == NodeKind::kIfExp;
  }
  return false;
}

std::string_view CategoryName(NodeCategory category) {
  switch (category) {
    case NodeCategory::kAny: return "any";
    case NodeCategory::kContainerLiteral: return "container-literal";
    case NodeCategory::kBoolOp: return "bool-op";
    case NodeCategory::kCall: return "call";
    case NodeCategory::kAttributeAccess: return "attribute-access";
    case NodeCategory::kConditional: return "conditional";
  }
  return "?";
}

SyntaxTree::SyntaxTree(std::string path, std::string text,
                       std::vector<Node> nodes)
    : path_(std::move(path)), text_(std::move(text)), nodes_(std::move(nodes)) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < text_.size(); ++i) {
    if (text_[i] == '\n') line_starts_.push_back(i + 1);
  }
}

std::string_view SyntaxTree::TextOf(Span span) const {
  return std::string_view(text_).substr(span.begin, span.size());
}

SourceLocation SyntaxTree::ToLocation(Span span) const {
  auto line_of = [this](std::size_t offset) {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    return static_cast<std::size_t>(it - line_starts_.begin()) - 1;
  };
  const std::size_t bl = line_of(span.begin);
  const std::size_t el = line_of(span.end);
  SourceLocation loc;
  loc.file = path_;
  loc.start_line = static_cast<int>(bl) + 1;
  loc.start_col = static_cast<int>(span.begin - line_starts_[bl]);
  loc.end_line = static_cast<int>(el) + 1;
  loc.end_col = static_cast<int>(span.end - line_starts_[el]);
  return loc;
}

bool SyntaxTree::ToSpan(const SourceLocation& loc, Span* span) const {
  auto offset = [this](int line, int col, std::size_t* out) {
    if (line < 1 || col < 0 ||
        static_cast<std::size_t>(line) > line_starts_.size()) {
      return false;
    }
    const std::size_t start = line_starts_[line - 1];
    const std::size_t limit = static_cast<std::size_t>(line) <
                                      line_starts_.size()
                                  ? line_starts_[line] - 1
                                  : text_.size();
    if (start + col > limit) return false;
    *out = start + col;
    return true;
  };
  Span s;
  if (!offset(loc.start_line, loc.start_col, &s.begin) ||
      !offset(loc.end_line, loc.end_col, &s.end) || s.end < s.begin) {
    return false;
  }
  *span = s;
  return true;
}

void SyntaxTree::Walk(const std::function<bool(NodeId)>& visitor) const {
  std::vector<NodeId> stack{root()};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    if (!visitor(id)) continue;
    const auto& children = nodes_[id].children;
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      stack.push_back(*it);
    }
  }
}

NodeId SyntaxTree::EnclosingOfKind(NodeId id, NodeKind kind) const {
  for (NodeId p = nodes_[id].parent; p != kNoNode; p = nodes_[p].parent) {
    if (nodes_[p].kind == kind) return p;
  }
  return kNoNode;
}

NodeId Locate(const SyntaxTree& tree, const SourceLocation& loc,
              NodeCategory category) {
  if (!loc.IsWellFormed()) {
    throw NodeNotFound("malformed location " + loc.ToString());
  }
  Span span;
  if (!tree.ToSpan(loc, &span)) {
    throw NodeNotFound("location " + loc.ToString() +
                       " is outside the file text");
  }
  NodeId found = kNoNode;
  for (NodeId id = 0; id < tree.size(); ++id) {
    const Node& n = tree.node(id);
    if (n.span != span || !InCategory(n.kind, category)) continue;
    if (found != kNoNode) {
      throw AmbiguousTarget("several " + std::string(CategoryName(category)) +
                            " nodes at " + loc.ToString());
    }
    found = id;
  }
  if (found == kNoNode) {
    throw NodeNotFound("no " + std::string(CategoryName(category)) +
                       " node at " + loc.ToString());
  }
  return found;
}

namespace {

void DumpNode(const SyntaxTree& tree, NodeId id, std::string* out) {
  const Node& n = tree.node(id);
  out->push_back('(');
  out->append(NodeKindName(n.kind));
  if (!n.text.empty()) {
    out->push_back(' ');
    out->append(n.text);
  } else if (n.kind == NodeKind::kConstant) {
    out->push_back(' ');
    out->append(tree.TextOf(id));
  }
  for (NodeId child : n.children) {
    out->push_back(' ');
    DumpNode(tree, child, out);
  }
  out->push_back(')');
}

}  // namespace

std::string DumpStructure(const SyntaxTree& tree) {
  std::string out;
  DumpNode(tree, tree.root(), &out);
  return out;
}

}  // namespace pyfault
