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

#include "pyfault/trace.h"

#include <fstream>
#include <stdexcept>

#include "pyfault/errors.h"

namespace pyfault {

using nlohmann::json;

std::string_view EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kCall: return "call";
    case EventKind::kAttributeAccess: return "attribute_access";
    case EventKind::kMethodCall: return "method_call";
    case EventKind::kConversionCall: return "conversion_call";
  }
  return "?";
}

bool IsDunder(std::string_view name) {
  return name.size() >= 4 && name.substr(0, 2) == "__" &&
         name.substr(name.size() - 2) == "__";
}

namespace {

std::optional<std::string> OptionalString(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::string>();
}

std::vector<std::string> StringList(const json& j, const char* key) {
  if (!j.contains(key)) return {};
  return j.at(key).get<std::vector<std::string>>();
}

json OptionalJson(const std::optional<std::string>& s) {
  return s ? json(*s) : json(nullptr);
}

}  // namespace

TraceEvent TraceEventFromJson(const json& j) {
  TraceEvent e;
  const std::string kind = j.at("kind").get<std::string>();
  e.loc.file = j.at("file").get<std::string>();
  e.loc.start_line = j.at("line").get<int>();
  e.loc.start_col = j.at("col").get<int>();
  e.loc.end_line = j.at("end_line").get<int>();
  e.loc.end_col = j.at("end_col").get<int>();
  if (!e.loc.IsWellFormed()) throw std::invalid_argument("malformed location");
  const json& p = j.at("payload");
  if (kind == "call") {
    e.kind = EventKind::kCall;
    CallPayload call;
    call.callee = p.at("callee").get<std::string>();
    for (const json& param : p.at("params")) {
      call.params.push_back(ParamInfo{param.at("name").get<std::string>(),
                                      param.at("kind").get<std::string>(),
                                      param.value("has_default", false)});
    }
    for (const json& arg : p.at("args")) {
      call.args.push_back(ArgInfo{arg.at("index").get<int>(),
                                  OptionalString(arg, "keyword"),
                                  OptionalString(arg, "param"),
                                  arg.value("starred", false)});
    }
    e.payload = std::move(call);
  } else if (kind == "attribute_access") {
    e.kind = EventKind::kAttributeAccess;
    e.payload = AttributePayload{p.at("attr").get<std::string>(),
                                 StringList(p, "receiver_attrs"),
                                 p.value("truncated", false),
                                 p.value("single_attribute", false)};
  } else if (kind == "method_call") {
    e.kind = EventKind::kMethodCall;
    e.payload = MethodCallPayload{p.at("method").get<std::string>(),
                                  p.value("bound", true),
                                  StringList(p, "receiver_attrs")};
  } else if (kind == "conversion_call") {
    e.kind = EventKind::kConversionCall;
    e.payload = ConversionPayload{p.at("function").get<std::string>(),
                                  p.at("arg_type").get<std::string>(),
                                  p.at("return_type").get<std::string>()};
  } else {
    throw std::invalid_argument("unknown event kind " + kind);
  }
  return e;
}

json TraceEventToJson(const TraceEvent& event) {
  json payload;
  if (const auto* c = std::get_if<CallPayload>(&event.payload)) {
    json params = json::array();
    for (const ParamInfo& p : c->params) {
      params.push_back(
          {{"name", p.name}, {"kind", p.kind}, {"has_default", p.has_default}});
    }
    json args = json::array();
    for (const ArgInfo& a : c->args) {
      args.push_back({{"index", a.index},
                      {"keyword", OptionalJson(a.keyword)},
                      {"param", OptionalJson(a.param)},
                      {"starred", a.starred}});
    }
    payload = {{"callee", c->callee}, {"params", params}, {"args", args}};
  } else if (const auto* a = std::get_if<AttributePayload>(&event.payload)) {
    payload = {{"attr", a->attr},
               {"receiver_attrs", a->receiver_attrs},
               {"truncated", a->truncated},
               {"single_attribute", a->single_attribute}};
  } else if (const auto* m = std::get_if<MethodCallPayload>(&event.payload)) {
    payload = {{"method", m->method},
               {"bound", m->bound},
               {"receiver_attrs", m->receiver_attrs}};
  } else if (const auto* v = std::get_if<ConversionPayload>(&event.payload)) {
    payload = {{"function", v->function},
               {"arg_type", v->arg_type},
               {"return_type", v->return_type}};
  }
  return json{{"kind", EventKindName(event.kind)},
              {"file", event.loc.file},
              {"line", event.loc.start_line},
              {"col", event.loc.start_col},
              {"end_line", event.loc.end_line},
              {"end_col", event.loc.end_col},
              {"payload", payload}};
}

std::vector<TraceEvent> ReadTrace(const std::string& path,
                                  TraceReadStats* stats) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read trace file " + path);
  std::vector<TraceEvent> events;
  TraceReadStats local;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      events.push_back(TraceEventFromJson(json::parse(line)));
      ++local.events;
    } catch (const std::exception&) {
      ++local.malformed;
    }
  }
  if (stats != nullptr) *stats = local;
  return events;
}

}  // namespace pyfault
