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

#include "pyfault/candidate.h"

#include <algorithm>
#include <fstream>
#include <tuple>

#include "pyfault/errors.h"

namespace pyfault {

using nlohmann::json;

std::string_view OperatorLabel(Operator op) {
  switch (op) {
    case Operator::kRemFuncArg: return "RemFuncArg";
    case Operator::kRemConvFunc: return "RemConvFunc";
    case Operator::kRemElCont: return "RemElCont";
    case Operator::kRemExpCond: return "RemExpCond";
    case Operator::kChUsedAttr: return "ChUsedAttr";
    case Operator::kRemAttrAcc: return "RemAttrAcc";
    case Operator::kRemMetCall: return "RemMetCall";
  }
  return "?";
}

std::optional<Operator> OperatorFromLabel(std::string_view label) {
  for (Operator op : kAllOperators) {
    if (OperatorLabel(op) == label) return op;
  }
  return std::nullopt;
}

bool IsStaticOperator(Operator op) {
  return op == Operator::kRemElCont || op == Operator::kRemExpCond;
}

NodeCategory TargetCategory(Operator op) {
  switch (op) {
    case Operator::kRemFuncArg:
    case Operator::kRemConvFunc:
    case Operator::kRemMetCall:
      return NodeCategory::kCall;
    case Operator::kRemElCont:
      return NodeCategory::kContainerLiteral;
    case Operator::kRemExpCond:
      return NodeCategory::kBoolOp;
    case Operator::kChUsedAttr:
    case Operator::kRemAttrAcc:
      return NodeCategory::kAttributeAccess;
  }
  return NodeCategory::kAny;
}

std::string CandidateRecord::Discriminator() const {
  if (const auto* m = std::get_if<RemFuncArgMeta>(&metadata)) {
    return std::to_string(m->arg_index);
  }
  return "";
}

namespace {

auto OrderKey(const CandidateRecord& r) {
  return std::make_tuple(std::cref(r.loc.file), r.loc.start_line,
                         r.loc.start_col, -r.loc.end_line, -r.loc.end_col,
                         static_cast<int>(r.label), r.Discriminator());
}

}  // namespace

bool CandidateLess(const CandidateRecord& a, const CandidateRecord& b) {
  return OrderKey(a) < OrderKey(b);
}

bool SameCandidate(const CandidateRecord& a, const CandidateRecord& b) {
  return OrderKey(a) == OrderKey(b);
}

void SortAndDedup(std::vector<CandidateRecord>* records) {
  std::stable_sort(records->begin(), records->end(), CandidateLess);
  records->erase(std::unique(records->begin(), records->end(), SameCandidate),
                 records->end());
}

json MetadataToJson(const Metadata& metadata) {
  struct Visitor {
    json operator()(const RemFuncArgMeta& m) const {
      return json{{"arg_index", m.arg_index},
                  {"arg_name", m.arg_name ? json(*m.arg_name) : json(nullptr)},
                  {"reason", m.reason},
                  {"callee", m.callee}};
    }
    json operator()(const RemConvFuncMeta& m) const {
      return json{{"function", m.function},
                  {"observed_types", m.observed_types}};
    }
    json operator()(const RemElContMeta& m) const {
      json j{{"container", m.container}, {"element_count", m.element_count}};
      if (m.container == "dict") {
        json pairs = json::array();
        for (const auto& [key, value] : m.key_value_pairs) {
          pairs.push_back(json::array({key ? json(*key) : json(nullptr), value}));
        }
        j["key_value_pairs"] = std::move(pairs);
      }
      return j;
    }
    json operator()(const RemExpCondMeta& m) const {
      return json{{"operand_count", m.operand_count},
                  {"operands", m.operands},
                  {"structure", m.structure},
                  {"context", m.context}};
    }
    json operator()(const ChUsedAttrMeta& m) const {
      return json{{"attribute", m.attribute}, {"alternate", m.alternate}};
    }
    json operator()(const RemAttrAccMeta& m) const {
      return json{{"attribute", m.attribute}};
    }
    json operator()(const RemMetCallMeta& m) const {
      return json{{"method", m.method}};
    }
  };
  return std::visit(Visitor{}, metadata);
}

json CandidateToJson(const CandidateRecord& record) {
  return json{{"label", OperatorLabel(record.label)},
              {"loc", record.loc},
              {"metadata", MetadataToJson(record.metadata)}};
}

CandidateRecord CandidateFromJson(const json& j, std::size_t index) {
  try {
    CandidateRecord r;
    const auto label = OperatorFromLabel(j.at("label").get<std::string>());
    if (!label) throw SchemaError(index, "unknown operator label");
    r.label = *label;
    r.loc = j.at("loc").get<SourceLocation>();
    if (!r.loc.IsWellFormed()) throw SchemaError(index, "malformed location");
    const json& m = j.at("metadata");
    switch (r.label) {
      case Operator::kRemFuncArg: {
        RemFuncArgMeta meta;
        meta.arg_index = m.at("arg_index").get<int>();
        if (!m.at("arg_name").is_null()) {
          meta.arg_name = m.at("arg_name").get<std::string>();
        }
        meta.reason = m.at("reason").get<std::string>();
        meta.callee = m.at("callee").get<std::string>();
        r.metadata = meta;
        break;
      }
      case Operator::kRemConvFunc: {
        RemConvFuncMeta meta;
        meta.function = m.at("function").get<std::string>();
        meta.observed_types =
            m.at("observed_types").get<std::vector<std::string>>();
        r.metadata = meta;
        break;
      }
      case Operator::kRemElCont: {
        RemElContMeta meta;
        meta.container = m.at("container").get<std::string>();
        meta.element_count = m.at("element_count").get<int>();
        if (m.contains("key_value_pairs")) {
          for (const json& pair : m.at("key_value_pairs")) {
            std::optional<int> key;
            if (!pair.at(0).is_null()) key = pair.at(0).get<int>();
            meta.key_value_pairs.emplace_back(key, pair.at(1).get<int>());
          }
        }
        r.metadata = meta;
        break;
      }
      case Operator::kRemExpCond: {
        RemExpCondMeta meta;
        meta.operand_count = m.at("operand_count").get<int>();
        meta.operands = m.at("operands").get<std::vector<SourceLocation>>();
        meta.structure = m.at("structure").get<std::string>();
        meta.context = m.at("context").get<std::string>();
        r.metadata = meta;
        break;
      }
      case Operator::kChUsedAttr:
        r.metadata = ChUsedAttrMeta{m.at("attribute").get<std::string>(),
                                    m.at("alternate").get<std::string>()};
        break;
      case Operator::kRemAttrAcc:
        r.metadata = RemAttrAccMeta{m.at("attribute").get<std::string>()};
        break;
      case Operator::kRemMetCall:
        r.metadata = RemMetCallMeta{m.at("method").get<std::string>()};
        break;
    }
    return r;
  } catch (const json::exception& e) {
    throw SchemaError(index, e.what());
  }
}

void WriteCandidates(const std::string& path,
                     const std::vector<CandidateRecord>& records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path);
  for (const CandidateRecord& r : records) {
    out << CandidateToJson(r).dump() << '\n';
  }
}

std::vector<CandidateRecord> ReadCandidates(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::vector<CandidateRecord> records;
  std::string line;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw SchemaError(index, e.what());
    }
    records.push_back(CandidateFromJson(j, index));
    ++index;
  }
  return records;
}

}  // namespace pyfault
