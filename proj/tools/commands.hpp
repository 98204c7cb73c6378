// Copyright 2026 The mmescheck Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace mmescheck {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
    kExitPass = 0,
    kExitCheckFailed = 1,
    kExitInputError = 2,
    kExitInternalError = 3,
};

/// Uniform result of every subcommand. `pass` is the conjunction of the
/// command's checks; the serialized form depends only on the inputs.
struct ReportEnvelope {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    bool pass = false;
    std::string version;
    std::vector<std::string> warnings;
    int exit_code = kExitCheckFailed;

    [[nodiscard]] Json to_json() const;
    [[nodiscard]] std::string to_text() const;
};

struct CommandOptions {
    std::optional<std::string> table_path;
    double tolerance = 1e-9;
    std::string model;
    std::optional<std::string> isolated;
    std::uint64_t runs = 100000;
    std::uint64_t seed = 42;
    std::string state = "mmes"; // mmes | product
    unsigned workers = 1;       // never affects the report
    /// Test hook: doubles one amplitude of the state before verification.
    std::optional<std::size_t> perturb_amplitude;
};

[[nodiscard]] std::string version();

ReportEnvelope cmd_verify_state(const CommandOptions& options);
ReportEnvelope cmd_verify_correlations(const CommandOptions& options);
ReportEnvelope cmd_nogo(const CommandOptions& options);
ReportEnvelope cmd_scan_all(const CommandOptions& options);
ReportEnvelope cmd_compat(const CommandOptions& options);
ReportEnvelope cmd_simulate(const CommandOptions& options);

/// Dispatches by subcommand name and maps exceptions to exit codes: input
/// problems to 2, failed cross-checks to 3.
ReportEnvelope run_command(const std::string& name, const CommandOptions& options);

} // namespace mmescheck
