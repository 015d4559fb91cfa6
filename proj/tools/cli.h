// Copyright 2026 The holo-ee Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOLOEE_TOOLS_CLI_H
#define HOLOEE_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace holoee::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitCheckFailed = 2,
    kExitInputError = 3,
};

/// Entry point shared by the executable and the tests. argv[0] is the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// The report with its "timestamp" member removed; two runs with identical inputs produce
/// byte-identical dumps of this object.
nlohmann::json report_payload(const nlohmann::json &report);

}  // namespace holoee::cli

#endif  // HOLOEE_TOOLS_CLI_H
