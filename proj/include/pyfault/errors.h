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

#ifndef PYFAULT_ERRORS_H_
#define PYFAULT_ERRORS_H_

#include <stdexcept>
#include <string>
#include <vector>

namespace pyfault {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid source text. The file is excluded from analysis.
class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& message);
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  int col_;
  std::string detail_;
};

// A location does not resolve to a node of the requested kind.
class NodeNotFound : public Error {
 public:
  using Error::Error;
};

// A location or metadata resolves to more than one plausible target.
class AmbiguousTarget : public Error {
 public:
  using Error::Error;
};

// A replacement cannot occupy the rewritten position.
class SerializationError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  SchemaError(std::size_t record_index, const std::string& message);
  std::size_t record_index() const { return record_index_; }

 private:
  std::size_t record_index_;
};

class MissingCoverage : public Error {
 public:
  using Error::Error;
};

class BaselineRed : public Error {
 public:
  BaselineRed(std::vector<std::string> failing_tests, const std::string& why);
  const std::vector<std::string>& failing_tests() const {
    return failing_tests_;
  }

 private:
  std::vector<std::string> failing_tests_;
};

class InstrumentationFailure : public Error {
 public:
  using Error::Error;
};

class EmptyUniverse : public Error {
 public:
  using Error::Error;
};

}  // namespace pyfault

#endif  // PYFAULT_ERRORS_H_
