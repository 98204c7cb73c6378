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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmes/correlations.hpp"
#include "mmes/parity.hpp"

namespace mmes {

/// Which parties' hidden variables may depend on one another.
///
/// Local: one variable per (party, axis) for the whole table.
/// BlockNonlocal: every party except `isolated_party` may co-depend; their
///   variables are still one per (party, axis) once the dependence on the
///   settings is suppressed, and the isolated party's outcomes are fixed
///   constants supplied by an OutcomeAssignment.
/// FullyNonlocal: every row gets its own fresh variables.
struct LocalityModel {
    enum class Kind { Local, BlockNonlocal, FullyNonlocal };

    Kind kind = Kind::Local;
    std::size_t isolated_party = 0;

    static LocalityModel local() { return {Kind::Local, 0}; }
    static LocalityModel block_nonlocal(std::size_t isolated) {
        return {Kind::BlockNonlocal, isolated};
    }
    static LocalityModel fully_nonlocal() { return {Kind::FullyNonlocal, 0}; }

    [[nodiscard]] std::string name() const;
};

/// Predetermined outcome of the isolated party per measured axis.
using OutcomeAssignment = std::map<PauliAxis, int>;

/// Known +-1 values keyed by (party, axis).
using VariableValues = std::map<std::pair<std::size_t, PauliAxis>, int>;

/// Display name such as "y_B"; per-row copies get a suffix, "y_B[r7]".
[[nodiscard]] std::string variable_name(const HVVariable& var,
                                        const std::vector<std::string>& party_names);

/// Axes (X, Y, Z order) with which `party` appears somewhere in the table.
[[nodiscard]] std::vector<PauliAxis> party_axes(const CorrelationTable& table,
                                                std::size_t party);

/// All 2^k assignments over `axes`, first axis most significant and +1
/// before -1.
[[nodiscard]] std::vector<OutcomeAssignment>
enumerate_assignments(const std::vector<PauliAxis>& axes);

/// Compiles one parity equation per table row. Variables are ordered by party
/// then axis (then row for FullyNonlocal). Throws StructuralError if the
/// assignment is missing for BlockNonlocal, present otherwise, or does not
/// cover exactly the isolated party's axes.
[[nodiscard]] ParitySystem compile(const CorrelationTable& table,
                                   const LocalityModel& model,
                                   const std::optional<OutcomeAssignment>& assignment = {});

/// One compiled system decided by both solvers.
struct SolvedSystem {
    std::optional<OutcomeAssignment> assignment;
    ParitySystem system;
    Verdict gf2;
    Verdict bruteforce;

    [[nodiscard]] bool satisfiable() const noexcept { return gf2.satisfiable; }
};

/// Runs solve_gf2 and solve_bruteforce and verifies both verdicts; throws
/// ConsistencyError if they disagree.
[[nodiscard]] SolvedSystem solve_both(ParitySystem system,
                                      std::optional<OutcomeAssignment> assignment = {});

/// Compiles and solves a Local or FullyNonlocal model.
[[nodiscard]] SolvedSystem check_model(const CorrelationTable& table,
                                       const LocalityModel& model);

struct ScanReport {
    std::size_t isolated_party = 0;
    std::vector<PauliAxis> axes;
    std::vector<SolvedSystem> results; // in enumerate_assignments order
    bool no_go_holds = false;          // every assignment unsatisfiable

    [[nodiscard]] std::size_t unsatisfiable_count() const;
};

/// Solves the block-nonlocal system for every outcome assignment of the
/// isolated party. Assignments run concurrently when `parallel` is set; the
/// report order never depends on completion order.
[[nodiscard]] ScanReport scan_block_nonlocal(const CorrelationTable& table,
                                             std::size_t isolated_party,
                                             bool parallel = true);

/// Re-evaluates every table row in sign form with the witness values (and
/// the isolated party's assignment where applicable). Independent of the
/// bit encoding used by the solvers.
[[nodiscard]] bool witness_reproduces_table(const CorrelationTable& table,
                                            const LocalityModel& model,
                                            const SolvedSystem& solved);

/// Values of the variables a row refers to, pulled from a solved witness.
/// For BlockNonlocal the isolated party's factors come from the assignment.
[[nodiscard]] VariableValues row_values(const CorrelationTable& table,
                                        const LocalityModel& model,
                                        const SolvedSystem& solved, std::size_t row);

struct Explanation {
    std::size_t row = 0;
    std::size_t party = 0;
    PauliAxis axis = PauliAxis::X;
    int sign = 1;
    std::vector<std::pair<std::size_t, PauliAxis>> others;
    int value = 1;
    std::string text;
};

/// Solves a row for its first non-identity factor, e.g.
/// "y_B = -(y_C·x_D) = -1". Needs values for every other factor; if the
/// target's own value is supplied it must agree. Throws StructuralError on
/// rows with fewer than two factors or inconsistent values.
[[nodiscard]] Explanation nonlocal_explanation(const CorrelationTable& table,
                                               std::size_t row,
                                               const VariableValues& values);

} // namespace mmes
