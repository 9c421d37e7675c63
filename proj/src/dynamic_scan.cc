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

#include "pyfault/dynamic_scan.h"

#include <algorithm>
#include <map>
#include <utility>

#include "pyfault/hashing.h"

namespace pyfault {

const std::set<std::string>& DefaultConversionFunctions() {
  static const std::set<std::string> kDefault = {
      "int",  "float", "str",   "bool",      "list",   "tuple",
      "set",  "dict",  "bytes", "frozenset", "complex"};
  return kDefault;
}

namespace {

const ParamInfo* FindParam(const CallPayload& call, const std::string& name) {
  for (const ParamInfo& p : call.params) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

bool HasParamKind(const CallPayload& call, const std::string& kind) {
  return std::any_of(call.params.begin(), call.params.end(),
                     [&](const ParamInfo& p) { return p.kind == kind; });
}

void AddRemFuncArg(const TraceEvent& event, const CallPayload& call,
                   std::vector<CandidateRecord>* out) {
  const bool var_keyword = HasParamKind(call, "var_keyword");
  for (std::size_t i = 0; i < call.args.size(); ++i) {
    const ArgInfo& arg = call.args[i];
    if (arg.starred) continue;
    const ParamInfo* param = arg.param ? FindParam(call, *arg.param) : nullptr;
    std::string reason;
    if (arg.keyword) {
      if (param != nullptr && param->kind != "var_keyword") {
        if (param->has_default) reason = "explicit_default";
      } else if (var_keyword) {
        reason = "undeclared_keyword";
      }
    } else if (param != nullptr && param->kind == "var_positional") {
      reason = "extra_positional";
    } else if (param != nullptr && param->has_default) {
      // Dropping a positional default is safe only when nothing positional
      // follows it; otherwise later arguments would shift.
      const bool later_positional = std::any_of(
          call.args.begin() + static_cast<std::ptrdiff_t>(i) + 1,
          call.args.end(), [](const ArgInfo& a) { return !a.keyword; });
      if (!later_positional) reason = "explicit_default";
    }
    if (reason.empty()) continue;
    RemFuncArgMeta meta;
    meta.arg_index = arg.index;
    meta.arg_name = arg.keyword ? arg.keyword : arg.param;
    meta.reason = reason;
    meta.callee = call.callee;
    out->push_back(CandidateRecord{Operator::kRemFuncArg, event.loc, meta});
  }
}

}  // namespace

std::vector<CandidateRecord> DeriveRemFuncArg(
    const std::vector<TraceEvent>& events) {
  std::vector<CandidateRecord> out;
  for (const TraceEvent& e : events) {
    if (const auto* call = std::get_if<CallPayload>(&e.payload)) {
      AddRemFuncArg(e, *call, &out);
    }
  }
  SortAndDedup(&out);
  return out;
}

std::vector<CandidateRecord> DeriveRemConvFunc(
    const std::vector<TraceEvent>& events,
    const std::set<std::string>& conversion_functions) {
  struct Site {
    std::string function;
    std::set<std::string> arg_types;
    bool mismatch = false;
  };
  std::map<SourceLocation, Site> sites;
  for (const TraceEvent& e : events) {
    const auto* conv = std::get_if<ConversionPayload>(&e.payload);
    if (conv == nullptr || !conversion_functions.count(conv->function)) {
      continue;
    }
    Site& site = sites[e.loc];
    if (site.function.empty()) site.function = conv->function;
    site.arg_types.insert(conv->arg_type);
    if (conv->arg_type != conv->return_type) site.mismatch = true;
  }
  std::vector<CandidateRecord> out;
  for (const auto& [loc, site] : sites) {
    if (!site.mismatch) continue;
    RemConvFuncMeta meta{site.function, std::vector<std::string>(
                                            site.arg_types.begin(),
                                            site.arg_types.end())};
    out.push_back(CandidateRecord{Operator::kRemConvFunc, loc, meta});
  }
  SortAndDedup(&out);
  return out;
}

std::vector<CandidateRecord> DeriveAttributeOps(
    const std::vector<TraceEvent>& events, std::uint64_t seed) {
  struct Site {
    std::string attr;
    std::set<std::string> receiver_attrs;
  };
  std::map<SourceLocation, Site> sites;
  for (const TraceEvent& e : events) {
    const auto* access = std::get_if<AttributePayload>(&e.payload);
    if (access == nullptr || IsDunder(access->attr)) continue;
    Site& site = sites[e.loc];
    if (site.attr.empty()) site.attr = access->attr;
    for (const std::string& name : access->receiver_attrs) {
      if (!IsDunder(name)) site.receiver_attrs.insert(name);
    }
  }
  std::vector<CandidateRecord> out;
  for (const auto& [loc, site] : sites) {
    out.push_back(
        CandidateRecord{Operator::kRemAttrAcc, loc, RemAttrAccMeta{site.attr}});
    std::vector<std::string> alternates;
    for (const std::string& name : site.receiver_attrs) {
      if (name != site.attr) alternates.push_back(name);
    }
    if (site.receiver_attrs.size() < 2 || alternates.empty()) continue;
    std::mt19937_64 engine = KeyedEngine(seed, loc.ToString() + "|" + site.attr);
    const std::string& alternate =
        alternates[PickIndex(engine, alternates.size())];
    out.push_back(CandidateRecord{Operator::kChUsedAttr, loc,
                                  ChUsedAttrMeta{site.attr, alternate}});
  }
  SortAndDedup(&out);
  return out;
}

std::vector<CandidateRecord> DeriveRemMetCall(
    const std::vector<TraceEvent>& events) {
  std::vector<CandidateRecord> out;
  for (const TraceEvent& e : events) {
    const auto* call = std::get_if<MethodCallPayload>(&e.payload);
    if (call == nullptr || !call->bound) continue;
    out.push_back(CandidateRecord{Operator::kRemMetCall, e.loc,
                                  RemMetCallMeta{call->method}});
  }
  SortAndDedup(&out);
  return out;
}

std::vector<CandidateRecord> ScanDynamic(const std::vector<TraceEvent>& events,
                                         const DynamicScanOptions& options) {
  std::vector<CandidateRecord> out = DeriveRemFuncArg(events);
  for (auto&& part :
       {DeriveRemConvFunc(events, options.conversion_functions),
        DeriveAttributeOps(events, options.seed), DeriveRemMetCall(events)}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  SortAndDedup(&out);
  return out;
}

}  // namespace pyfault
