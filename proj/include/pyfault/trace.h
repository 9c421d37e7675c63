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

#ifndef PYFAULT_TRACE_H_
#define PYFAULT_TRACE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pyfault/source_location.h"

namespace pyfault {

enum class EventKind { kCall, kAttributeAccess, kMethodCall, kConversionCall };

std::string_view EventKindName(EventKind kind);

struct ParamInfo {
  std::string name;
  // positional_only, positional_or_keyword, var_positional, keyword_only,
  // var_keyword
  std::string kind;
  bool has_default = false;
};

// One argument expression at the call site. `index` counts the call's
// arguments in source order, positional and keyword alike.
struct ArgInfo {
  int index = 0;
  std::optional<std::string> keyword;  // absent for positional arguments
  std::optional<std::string> param;    // parameter the argument bound to
  bool starred = false;                // *iterable or **mapping expansion
};

struct CallPayload {
  std::string callee;
  std::vector<ParamInfo> params;
  std::vector<ArgInfo> args;
};

struct AttributePayload {
  std::string attr;
  std::vector<std::string> receiver_attrs;
  bool truncated = false;
  bool single_attribute = false;
};

struct MethodCallPayload {
  std::string method;
  bool bound = true;
  std::vector<std::string> receiver_attrs;
};

struct ConversionPayload {
  std::string function;
  std::string arg_type;
  std::string return_type;
};

struct TraceEvent {
  EventKind kind = EventKind::kCall;
  SourceLocation loc;
  std::variant<CallPayload, AttributePayload, MethodCallPayload,
               ConversionPayload>
      payload;
};

// Throws std::invalid_argument (or a json exception) on malformed input.
TraceEvent TraceEventFromJson(const nlohmann::json& j);
nlohmann::json TraceEventToJson(const TraceEvent& event);

struct TraceReadStats {
  std::size_t events = 0;
  std::size_t malformed = 0;
};

// Reads a JSONL trace. Malformed lines are skipped and counted.
std::vector<TraceEvent> ReadTrace(const std::string& path,
                                  TraceReadStats* stats);

bool IsDunder(std::string_view name);

}  // namespace pyfault

#endif  // PYFAULT_TRACE_H_
