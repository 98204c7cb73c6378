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

#include <algorithm>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

void add_common_options(CLI::App* sub, mmescheck::CommandOptions& opts, bool& json) {
    sub->add_option("--table", opts.table_path, "Correlation table file (default: canonical)");
    sub->add_option("--tolerance", opts.tolerance, "Comparison tolerance")
        ->capture_default_str();
    sub->add_option("--model", opts.model, "Locality model: local, block or full");
    sub->add_option("--isolated", opts.isolated, "Isolated party label, e.g. E");
    sub->add_option("--runs", opts.runs, "Protocol runs")->capture_default_str();
    sub->add_option("--seed", opts.seed, "Protocol seed")->capture_default_str();
    sub->add_option("--state", opts.state, "State: mmes or product")->capture_default_str();
    sub->add_option("--workers", opts.workers, "Worker threads (output is unaffected)");
    sub->add_flag("--json", json, "Emit the report as JSON");
    sub->add_option("--perturb-amplitude", opts.perturb_amplitude)->group("");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mmescheck: five-party nonlocality verifier"};
    app.set_version_flag("--version", mmescheck::version());
    app.require_subcommand(1);

    mmescheck::CommandOptions opts;
    opts.workers = std::clamp(std::thread::hardware_concurrency(), 1U, 8U);
    bool json = false;

    const std::pair<const char*, const char*> commands[] = {
        {"verify-state", "Check norm, amplitudes and MMES purities of the state"},
        {"verify-correlations", "Evaluate every table row on the state"},
        {"nogo", "Decide whether a hidden-variable model reproduces the table"},
        {"scan-all", "Block-nonlocal scan for every isolated party"},
        {"compat", "Minimum number of measurement contexts"},
        {"simulate", "Monte Carlo simulation of the measurement protocol"},
    };
    for (const auto& [name, help] : commands) {
        add_common_options(app.add_subcommand(name, help), opts, json);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : mmescheck::kExitInputError;
    }

    const auto* chosen = app.get_subcommands().front();
    const auto report = mmescheck::run_command(chosen->get_name(), opts);
    if (json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << report.to_text();
    }
    return report.exit_code;
}
