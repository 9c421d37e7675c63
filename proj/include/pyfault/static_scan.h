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

#ifndef PYFAULT_STATIC_SCAN_H_
#define PYFAULT_STATIC_SCAN_H_

#include <vector>

#include "pyfault/candidate.h"
#include "pyfault/syntax_tree.h"

namespace pyfault {

struct StaticScanOptions {
  bool include_asserts = false;
};

// RemElCont candidates: one per non-empty list, tuple, set or dict display,
// in tree pre-order. Comprehensions are not displays.
std::vector<CandidateRecord> ScanContainers(const SyntaxTree& tree);

// RemExpCond candidates: one per outermost boolean operation, in tree
// pre-order. Nested and/or operations, including those under "not", are
// flattened into the outer one's operands.
std::vector<CandidateRecord> ScanConditions(const SyntaxTree& tree,
                                            const StaticScanOptions& options);

// Leaves of the flattened boolean expression rooted at `op`, left to right.
std::vector<NodeId> ConditionOperands(const SyntaxTree& tree, NodeId op);

// Whether `op` is a boolean operation that is not flattened into an
// enclosing one.
bool IsOutermostBoolOp(const SyntaxTree& tree, NodeId op);

}  // namespace pyfault

#endif  // PYFAULT_STATIC_SCAN_H_
