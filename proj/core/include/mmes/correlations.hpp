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
#include <optional>
#include <string>
#include <vector>

#include "mmes/pauli.hpp"
#include "mmes/state_vector.hpp"

namespace mmes {

/// One perfect correlation <P> = expected_sign.
struct CorrelationRow {
    PauliString operators;
    int expected_sign = 1;

    friend bool operator==(const CorrelationRow&, const CorrelationRow&) = default;
};

/// Ordered list of correlation rows over a fixed set of named parties.
class CorrelationTable {
  public:
    /// Validates party counts, signs and uniqueness. Throws StructuralError.
    /// Empty `party_names` defaults to "A", "B", ... for `num_parties`.
    CorrelationTable(std::size_t num_parties, std::vector<CorrelationRow> rows,
                     std::vector<std::string> party_names = {});

    [[nodiscard]] std::size_t num_parties() const noexcept { return num_parties_; }
    [[nodiscard]] std::size_t size() const noexcept { return rows_.size(); }
    [[nodiscard]] bool empty() const noexcept { return rows_.empty(); }
    [[nodiscard]] const CorrelationRow& operator[](std::size_t i) const {
        return rows_[i];
    }
    [[nodiscard]] const std::vector<CorrelationRow>& rows() const noexcept {
        return rows_;
    }
    [[nodiscard]] const std::vector<std::string>& party_names() const noexcept {
        return party_names_;
    }

    /// Index of the party labelled `name`; throws StructuralError if absent.
    [[nodiscard]] std::size_t party_index(std::string_view name) const;

    /// Copy without row `index`.
    [[nodiscard]] CorrelationTable without_row(std::size_t index) const;

  private:
    std::size_t num_parties_;
    std::vector<CorrelationRow> rows_;
    std::vector<std::string> party_names_;
};

/// Default party labels "A", "B", ... .
[[nodiscard]] std::vector<std::string> default_party_names(std::size_t num_parties);

/// The five-qubit maximally multipartite entangled state, with amplitudes
/// +-1/sqrt(32) and parties A..E on qubits 0..4.
[[nodiscard]] StateVector build_mmes5();

/// The sixteen perfect correlations of the five-qubit state, in canonical
/// order. Row r carries equation label r + 2 in printed reports.
[[nodiscard]] CorrelationTable canonical_table();

/// Printed equation label of a canonical table row.
[[nodiscard]] constexpr std::size_t equation_label(std::size_t row) noexcept {
    return row + 2;
}

struct RowCheck {
    std::size_t row = 0;
    PauliString operators;
    int expected_sign = 1;
    double computed = 0.0;
    bool pass = false;
};

struct TableVerification {
    std::vector<RowCheck> rows;
    bool pass = true;
};

/// Evaluates every row on `state`; a row passes when |computed - expected|
/// <= tolerance. An empty table passes vacuously.
[[nodiscard]] TableVerification verify_table(const StateVector& state,
                                             const CorrelationTable& table,
                                             double tolerance);

/// True iff on every party the axes agree or at least one side is I.
[[nodiscard]] bool rows_compatible(const CorrelationRow& a, const CorrelationRow& b);

/// How two rows may share one measurement run.
///
/// SharedSettings: rows_compatible, so two rows may reuse the same outcome of
///   a party that measures the same axis for both.
/// DisjointBlock: the rows must be rows_compatible on the isolated party and
///   involve disjoint sets of the remaining parties, so after the isolated
///   party's outcomes are fixed the two reduced equations share no variable.
///   This is the counting that yields 13 contexts for the canonical table.
enum class CompatibilityRule { SharedSettings, DisjointBlock };

/// Whether two distinct rows can be tested in the same run under `rule`.
/// A row is always jointly testable with itself.
[[nodiscard]] bool rows_jointly_testable(const CorrelationRow& a, const CorrelationRow& b,
                                         CompatibilityRule rule,
                                         std::size_t isolated_party);

struct CompatibilityGroup {
    std::vector<std::size_t> row_indices; // ascending
    PauliString joint_context;            // common axis per party, I if free
};

struct CoverOptions {
    CompatibilityRule rule = CompatibilityRule::DisjointBlock;
    /// Only used by DisjointBlock; defaults to the last party.
    std::optional<std::size_t> isolated_party;
};

/// Minimum partition of the rows into pairwise jointly testable groups,
/// found by exact iterative-deepening search. Among minimum partitions the
/// one whose row-to-group label sequence (groups numbered by first row) is
/// lexicographically smallest is returned.
[[nodiscard]] std::vector<CompatibilityGroup>
minimum_context_cover(const CorrelationTable& table, const CoverOptions& options = {});

struct SubsystemPurity {
    std::vector<std::size_t> qubits;
    double purity = 0.0;
    double target = 0.0; // 2^-|qubits|
    bool pass = false;
};

struct PurityReport {
    std::vector<SubsystemPurity> single;
    std::vector<SubsystemPurity> pairs;
    bool perfect = false; // all subsystems of size <= 2 maximally mixed
};

inline constexpr double kPurityTolerance = 1e-9;

/// Purities of every one- and two-qubit reduction of a five-qubit state.
[[nodiscard]] PurityReport mmes_purity_report(const StateVector& state);

} // namespace mmes
