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

#ifndef PYFAULT_CANDIDATE_H_
#define PYFAULT_CANDIDATE_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pyfault/source_location.h"
#include "pyfault/syntax_tree.h"

namespace pyfault {

enum class Operator {
  kRemFuncArg,
  kRemConvFunc,
  kRemElCont,
  kRemExpCond,
  kChUsedAttr,
  kRemAttrAcc,
  kRemMetCall,
};

inline constexpr Operator kAllOperators[] = {
    Operator::kRemFuncArg, Operator::kRemConvFunc, Operator::kRemElCont,
    Operator::kRemExpCond, Operator::kChUsedAttr,  Operator::kRemAttrAcc,
    Operator::kRemMetCall};

std::string_view OperatorLabel(Operator op);
std::optional<Operator> OperatorFromLabel(std::string_view label);
// RemElCont and RemExpCond are discovered from source alone.
bool IsStaticOperator(Operator op);
// Node family that a candidate's location addresses.
NodeCategory TargetCategory(Operator op);

struct RemFuncArgMeta {
  int arg_index = 0;  // 0-based among the call's arguments
  std::optional<std::string> arg_name;
  // "explicit_default", "extra_positional" or "undeclared_keyword".
  std::string reason;
  std::string callee;
};

struct RemConvFuncMeta {
  std::string function;
  std::vector<std::string> observed_types;  // sorted, unique
};

struct RemElContMeta {
  std::string container;  // list, tuple, set, dict
  int element_count = 0;
  // Dict displays only: (key index, value index) per entry, where keys and
  // values are numbered as parallel lists. A "**mapping" entry has no key.
  std::vector<std::pair<std::optional<int>, int>> key_value_pairs;
};

struct RemExpCondMeta {
  int operand_count = 0;
  std::vector<SourceLocation> operands;
  // Connective shape over operand indices, e.g. "and(or(#0,#1),#2)".
  std::string structure;
  std::string context;  // if, while, ifexp, expression
};

struct ChUsedAttrMeta {
  std::string attribute;
  std::string alternate;
};

struct RemAttrAccMeta {
  std::string attribute;
};

struct RemMetCallMeta {
  std::string method;
};

using Metadata =
    std::variant<RemFuncArgMeta, RemConvFuncMeta, RemElContMeta,
                 RemExpCondMeta, ChUsedAttrMeta, RemAttrAccMeta, RemMetCallMeta>;

struct CandidateRecord {
  Operator label = Operator::kRemElCont;
  SourceLocation loc;
  Metadata metadata;

  // Distinguishes records sharing (label, loc).
  std::string Discriminator() const;
};

// Canonical store order: file, start position, wider spans first, label,
// discriminator.
bool CandidateLess(const CandidateRecord& a, const CandidateRecord& b);
bool SameCandidate(const CandidateRecord& a, const CandidateRecord& b);

// Sorts canonically and drops records with a duplicate identity.
void SortAndDedup(std::vector<CandidateRecord>* records);

nlohmann::json MetadataToJson(const Metadata& metadata);
nlohmann::json CandidateToJson(const CandidateRecord& record);
// Throws SchemaError carrying `index` on malformed input.
CandidateRecord CandidateFromJson(const nlohmann::json& j, std::size_t index);

// The candidate store is one JSON object per line with sorted keys.
void WriteCandidates(const std::string& path,
                     const std::vector<CandidateRecord>& records);
std::vector<CandidateRecord> ReadCandidates(const std::string& path);

}  // namespace pyfault

#endif  // PYFAULT_CANDIDATE_H_
