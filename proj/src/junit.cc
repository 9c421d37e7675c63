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

#include "pyfault/junit.h"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pyfault/errors.h"

namespace pyfault {
namespace {

namespace pt = boost::property_tree;

void CollectCases(const pt::ptree& node, std::vector<TestVerdict>* out) {
  for (const auto& [tag, child] : node) {
    if (tag == "testsuite" || tag == "testsuites") {
      CollectCases(child, out);
      continue;
    }
    if (tag != "testcase") continue;
    const std::string classname = child.get("<xmlattr>.classname", "");
    const std::string name = child.get("<xmlattr>.name", "");
    TestVerdict v;
    v.id = classname.empty() ? name : classname + "::" + name;
    for (const auto& [result_tag, result] : child) {
      Verdict verdict;
      if (result_tag == "failure") {
        verdict = Verdict::kFailed;
      } else if (result_tag == "error") {
        verdict = Verdict::kError;
      } else if (result_tag == "skipped") {
        verdict = Verdict::kSkipped;
      } else {
        continue;
      }
      // A test that fails and then errors in teardown keeps the failure.
      if (v.verdict == Verdict::kPassed || v.verdict == Verdict::kSkipped) {
        v.verdict = verdict;
        v.message = result.get("<xmlattr>.message", "");
      }
    }
    out->push_back(std::move(v));
  }
}

}  // namespace

std::vector<TestVerdict> ParseJUnitText(const std::string& xml) {
  pt::ptree tree;
  std::istringstream in(xml);
  try {
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    throw Error(std::string("malformed JUnit report: ") + e.what());
  }
  if (tree.count("testsuites") == 0 && tree.count("testsuite") == 0) {
    throw Error("not a JUnit report");
  }
  std::vector<TestVerdict> out;
  CollectCases(tree, &out);
  return out;
}

std::vector<TestVerdict> ParseJUnit(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw Error("JUnit report " + path + " was not written");
  }
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseJUnitText(ss.str());
}

}  // namespace pyfault
