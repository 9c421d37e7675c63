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

#ifndef PYFAULT_MUTATOR_H_
#define PYFAULT_MUTATOR_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pyfault/candidate.h"
#include "pyfault/syntax_tree.h"

namespace pyfault {

// Concrete choice left open by a candidate.
struct MutationChoice {
  std::optional<int> element_index;  // RemElCont
  std::optional<int> operand_index;  // RemExpCond
};

struct MutationOptions {
  std::uint64_t seed = 0;
  bool exhaustive_conditions = false;
};

struct Mutant {
  std::string id;
  CandidateRecord candidate;
  nlohmann::json applied;  // the resolved MutationChoice, {} when none
  SourceLocation site;     // rewritten byte range in the original file
  std::string original_span_text;
  std::string mutated_span_text;
  std::string mutated_text;  // the whole file
  std::string diff;          // unified diff against the original file
};

struct InvalidMutant {
  std::string id;
  CandidateRecord candidate;
  nlohmann::json applied;
  std::string failure_signature;  // error class, e.g. SerializationError
  std::string detail;
};

// The seeded choices for a candidate: one by default, one per operand for
// RemExpCond in exhaustive mode.
std::vector<MutationChoice> ChoicesFor(const CandidateRecord& candidate,
                                       const MutationOptions& options);

nlohmann::json ChoiceToJson(const MutationChoice& choice);

std::string MutantId(const CandidateRecord& candidate,
                     const nlohmann::json& applied);

// Applies one operator. Throws NodeNotFound, AmbiguousTarget or
// SerializationError when the candidate cannot yield a valid mutant.
Mutant Mutate(const CandidateRecord& candidate, const SyntaxTree& tree,
              const MutationChoice& choice);

struct MutationBatch {
  std::vector<Mutant> mutants;        // sorted by id
  std::vector<InvalidMutant> invalid;  // sorted by id
};

// Mutates every candidate against the parsed file it names.
MutationBatch GenerateMutants(const std::vector<CandidateRecord>& candidates,
                              const std::map<std::string, SyntaxTree>& trees,
                              const MutationOptions& options);

// Single-hunk unified diff with three lines of context.
std::string UnifiedDiff(const std::string& path, const std::string& before,
                        const std::string& after);

}  // namespace pyfault

#endif  // PYFAULT_MUTATOR_H_
