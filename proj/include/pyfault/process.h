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

#ifndef PYFAULT_PROCESS_H_
#define PYFAULT_PROCESS_H_

#include <map>
#include <string>

namespace pyfault {

struct ProcessResult {
  int exit_code = -1;  // -1 when killed by a signal
  bool timed_out = false;
  double seconds = 0;
  std::string output;  // combined stdout and stderr
};

// Runs `command` through /bin/sh in `cwd` with the current environment plus
// `env`. The whole process group is killed once `timeout_seconds` elapse
// (no limit when not positive). Output is also written to `log_path` when
// it is non-empty.
ProcessResult RunShell(const std::string& command, const std::string& cwd,
                       const std::map<std::string, std::string>& env,
                       double timeout_seconds, const std::string& log_path);

}  // namespace pyfault

#endif  // PYFAULT_PROCESS_H_
