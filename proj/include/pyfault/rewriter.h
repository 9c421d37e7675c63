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

#ifndef PYFAULT_REWRITER_H_
#define PYFAULT_REWRITER_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "pyfault/source_location.h"
#include "pyfault/syntax_tree.h"

namespace pyfault {

// Replaces the bytes of `span` with `replacement`.
struct TextEdit {
  Span span;
  std::string replacement;
};

std::string ApplyEdit(std::string_view text, const TextEdit& edit);

// Replaces `target` with the source of `replacement`, which must be `target`
// itself or one of its descendants. Parenthesizes the replacement when its
// precedence would otherwise change the meaning of the surrounding code.
TextEdit ReplaceWithDescendant(const SyntaxTree& tree, NodeId target,
                               NodeId replacement);

// Renames the member of an attribute node.
TextEdit ReplaceAttributeName(const SyntaxTree& tree, NodeId attribute,
                              std::string_view name);

// Deletes element `index` of a list/tuple/set/dict display (dict entries count
// as one element each) or positional/keyword argument `index` of a call, along
// with one adjacent comma.
TextEdit RemoveFromSequence(const SyntaxTree& tree, NodeId sequence,
                            std::size_t index);

// Deletes `operand`, a direct child of bool-op `op`, and one adjacent
// connective.
TextEdit RemoveOperand(const SyntaxTree& tree, NodeId op, NodeId operand);

// Applies the edit and re-parses the result. Throws SerializationError when
// the rewritten text is not valid source.
std::string Rewrite(const SyntaxTree& tree, const TextEdit& edit);

}  // namespace pyfault

#endif  // PYFAULT_REWRITER_H_
