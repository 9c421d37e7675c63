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

#ifndef PYFAULT_SYNTAX_TREE_H_
#define PYFAULT_SYNTAX_TREE_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pyfault/source_location.h"

namespace pyfault {

enum class NodeKind : std::uint8_t {
  kModule,
  // Statements.
  kExprStmt,
  kAssign,
  kAugAssign,
  kAnnAssign,
  kReturn,
  kPass,
  kBreak,
  kContinue,
  kDelete,
  kRaise,
  kGlobal,
  kNonlocal,
  kImport,
  kImportFrom,
  kAssert,
  kIf,
  kWhile,
  kFor,
  kWith,
  kWithItem,
  kTry,
  kExceptHandler,
  kFunctionDef,
  kClassDef,
  kDecorator,
  kArg,
  // Expressions.
  kName,
  kConstant,
  kList,
  kTuple,
  kSet,
  kDict,
  kDictItem,
  kListComp,
  kSetComp,
  kDictComp,
  kGeneratorExp,
  kComprehension,
  kBoolOp,
  kUnaryOp,
  kBinOp,
  kCompare,
  kIfExp,
  kLambda,
  kNamedExpr,
  kCall,
  kKeyword,
  kAttribute,
  kSubscript,
  kSlice,
  kStarred,
  kAwait,
  kYield,
  kYieldFrom,
};

std::string_view NodeKindName(NodeKind kind);

// Coarse node families used to address mutation targets.
enum class NodeCategory : std::uint8_t {
  kAny,
  kContainerLiteral,  // list, tuple, set, dict displays
  kBoolOp,
  kCall,
  kAttributeAccess,
  kConditional,  // if, while, conditional expression
};

bool InCategory(NodeKind kind, NodeCategory category);
std::string_view CategoryName(NodeCategory category);

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

struct Node {
  NodeKind kind = NodeKind::kModule;
  // Extent as CPython's ast reports it: grouping parentheses around the node
  // itself are excluded, except for tuples whose parentheses belong to them.
  Span span;
  // Extent including any grouping parentheses.
  Span outer;
  NodeId parent = kNoNode;
  std::vector<NodeId> children;
  // Identifier or operator payload: attribute/keyword/name/def identifier,
  // operator spelling for BoolOp/UnaryOp/BinOp.
  std::string text;
  // Attribute member name or keyword argument name.
  Span name_span;
};

// Immutable parse tree over the exact bytes of one file. Serializing an
// unmodified tree returns the original text; rewrites splice bytes.
class SyntaxTree {
 public:
  SyntaxTree(std::string path, std::string text, std::vector<Node> nodes);

  const std::string& path() const { return path_; }
  const std::string& text() const { return text_; }
  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  const std::vector<Node>& nodes() const { return nodes_; }

  std::string_view TextOf(Span span) const;
  std::string_view TextOf(NodeId id) const { return TextOf(node(id).span); }

  SourceLocation ToLocation(Span span) const;
  // Returns false when the location does not address bytes of this file.
  bool ToSpan(const SourceLocation& loc, Span* span) const;

  // Pre-order walk. The visitor returns false to skip a node's children.
  void Walk(const std::function<bool(NodeId)>& visitor) const;

  // Nearest ancestor of one of the given kinds, or kNoNode.
  NodeId EnclosingOfKind(NodeId id, NodeKind kind) const;

  std::string Serialize() const { return text_; }

 private:
  std::string path_;
  std::string text_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> line_starts_;
};

// Throws ParseError on invalid input.
SyntaxTree Parse(std::string text, std::string path);

// Resolves a location to the unique node of the requested category whose
// span equals the location. Throws NodeNotFound or AmbiguousTarget.
NodeId Locate(const SyntaxTree& tree, const SourceLocation& loc,
              NodeCategory category);

// Position-free rendering of the tree shape, used to compare trees.
std::string DumpStructure(const SyntaxTree& tree);

}  // namespace pyfault

#endif  // PYFAULT_SYNTAX_TREE_H_
