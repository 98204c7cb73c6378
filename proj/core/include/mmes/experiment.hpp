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
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mmes/correlations.hpp"
#include "mmes/rng.hpp"
#include "mmes/state_vector.hpp"

namespace mmes {

/// One measured axis per party; identity is not a setting.
class MeasurementContext {
  public:
    /// Throws StructuralError if any axis is I or the list is empty.
    explicit MeasurementContext(std::vector<PauliAxis> axes);
    static MeasurementContext parse(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept { return axes_.size(); }
    [[nodiscard]] PauliAxis operator[](std::size_t k) const { return axes_[k]; }
    [[nodiscard]] const std::vector<PauliAxis>& axes() const noexcept { return axes_; }
    [[nodiscard]] PauliString as_pauli_string() const { return PauliString(axes_); }

    /// True iff the row's non-identity axes all agree with this context.
    [[nodiscard]] bool matches(const CorrelationRow& row) const;

  private:
    std::vector<PauliAxis> axes_;
};

/// Born-rule distribution over joint outcomes. Index bit for party k sits at
/// position n-1-k; a set bit means outcome -1. Built from the projectors
/// (1 + s P)/2 per party; entries below zero by rounding are clamped.
/// Throws ConsistencyError if the total deviates from 1 by more than 1e-10.
[[nodiscard]] std::vector<double> outcome_distribution(const StateVector& state,
                                                       const MeasurementContext& context);

/// +-1 outcome per party for a distribution index.
[[nodiscard]] std::vector<int> decode_outcomes(std::size_t index, std::size_t num_parties);

/// Draws index from a distribution with one uniform_unit() call.
[[nodiscard]] std::size_t sample_index(std::span<const double> distribution,
                                       ProtocolRng& rng);

/// One joint outcome tuple sampled by the Born rule.
[[nodiscard]] std::vector<int> sample_outcomes(const StateVector& state,
                                               const MeasurementContext& context,
                                               ProtocolRng& rng);

struct RunRecord {
    MeasurementContext context;
    std::vector<int> outcomes;
    std::vector<std::size_t> matched_rows;
    std::vector<std::pair<std::size_t, int>> products; // row -> outcome product
};

struct RowStatistics {
    std::size_t row = 0;
    int expected_sign = 1;
    std::uint64_t samples = 0;
    std::uint64_t plus = 0;  // runs with product +1
    std::uint64_t minus = 0; // runs with product -1
    std::optional<double> agreement_rate; // absent without samples
    bool pass = true;
};

struct MarginalCount {
    std::size_t party = 0;
    PauliAxis axis = PauliAxis::X;
    std::uint64_t trials = 0;
    std::uint64_t plus = 0;
};

struct ProtocolReport {
    std::uint64_t total_runs = 0;
    std::uint64_t seed = 0;
    std::uint64_t runs_with_match = 0;
    std::vector<RowStatistics> rows;
    std::vector<MarginalCount> marginals; // party-major, X/Y/Z
    bool pass = false;
};

/// Simulates one run: uniform random axis per party, Born-rule outcomes,
/// post-selection against the table.
[[nodiscard]] RunRecord simulate_run(const StateVector& state,
                                     const CorrelationTable& table, ProtocolRng& rng);

/// `num_runs` independent runs; run i draws from ProtocolRng(seed, i), so the
/// report depends only on (state, table, num_runs, seed), not on `workers`.
/// Passes iff every sampled row agrees with its sign on every sample.
[[nodiscard]] ProtocolReport run_protocol(const StateVector& state,
                                          const CorrelationTable& table,
                                          std::uint64_t num_runs, std::uint64_t seed,
                                          unsigned workers = 1);

/// (1/3)^weight: chance a uniformly random context matches the row.
[[nodiscard]] double expected_match_rate(const CorrelationRow& row);
[[nodiscard]] std::vector<double> expected_match_rates(const CorrelationTable& table);

} // namespace mmes
