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

#include "mmes/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>
#include <unordered_map>

#include "mmes/errors.hpp"

namespace mmes {
namespace {

constexpr double kNormalizationTolerance = 1e-10;

std::size_t context_key(const MeasurementContext& context) {
    std::size_t key = 0;
    for (auto axis : context.axes()) {
        key = key * 3 + (static_cast<std::size_t>(axis) - 1);
    }
    return key;
}

// Outcome distributions computed once per distinct context.
class DistributionCache {
  public:
    explicit DistributionCache(const StateVector& state) : state_(state) {}

    const std::vector<double>& get(const MeasurementContext& context) {
        const auto key = context_key(context);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, outcome_distribution(state_, context)).first;
        }
        return it->second;
    }

  private:
    const StateVector& state_;
    std::unordered_map<std::size_t, std::vector<double>> cache_;
};

MeasurementContext draw_context(std::size_t num_parties, ProtocolRng& rng) {
    std::vector<PauliAxis> axes(num_parties);
    for (auto& a : axes) {
        a = kMeasurableAxes[rng.uniform_below(3)];
    }
    return MeasurementContext(std::move(axes));
}

RunRecord run_once(const CorrelationTable& table, DistributionCache& cache,
                   ProtocolRng& rng) {
    auto context = draw_context(table.num_parties(), rng);
    const auto& dist = cache.get(context);
    auto outcomes = decode_outcomes(sample_index(dist, rng), table.num_parties());
    RunRecord record{std::move(context), std::move(outcomes), {}, {}};
    for (std::size_t r = 0; r < table.size(); ++r) {
        const auto& row = table[r];
        if (!record.context.matches(row)) {
            continue;
        }
        int product = 1;
        for (std::size_t k = 0; k < row.operators.size(); ++k) {
            if (row.operators[k] != PauliAxis::I) {
                product *= record.outcomes[k];
            }
        }
        record.matched_rows.push_back(r);
        record.products.emplace_back(r, product);
    }
    return record;
}

struct Tally {
    std::uint64_t runs_with_match = 0;
    std::vector<std::uint64_t> plus;
    std::vector<std::uint64_t> minus;
    std::vector<std::uint64_t> marginal_trials;
    std::vector<std::uint64_t> marginal_plus;

    Tally(std::size_t rows, std::size_t parties)
        : plus(rows), minus(rows), marginal_trials(parties * 3), marginal_plus(parties * 3) {}

    void add(const RunRecord& rec) {
        if (!rec.matched_rows.empty()) {
            ++runs_with_match;
        }
        for (const auto& [row, product] : rec.products) {
            ++(product > 0 ? plus : minus)[row];
        }
        for (std::size_t k = 0; k < rec.outcomes.size(); ++k) {
            const auto slot = k * 3 + (static_cast<std::size_t>(rec.context[k]) - 1);
            ++marginal_trials[slot];
            if (rec.outcomes[k] > 0) {
                ++marginal_plus[slot];
            }
        }
    }

    void merge(const Tally& other) {
        runs_with_match += other.runs_with_match;
        auto sum = [](std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
            for (std::size_t i = 0; i < a.size(); ++i) {
                a[i] += b[i];
            }
        };
        sum(plus, other.plus);
        sum(minus, other.minus);
        sum(marginal_trials, other.marginal_trials);
        sum(marginal_plus, other.marginal_plus);
    }
};

} // namespace

MeasurementContext::MeasurementContext(std::vector<PauliAxis> axes) : axes_(std::move(axes)) {
    if (axes_.empty()) {
        throw StructuralError("measurement context is empty");
    }
    if (std::find(axes_.begin(), axes_.end(), PauliAxis::I) != axes_.end()) {
        throw StructuralError("measurement context may not contain I");
    }
}

MeasurementContext MeasurementContext::parse(std::string_view text) {
    return MeasurementContext(PauliString::parse(text).axes());
}

bool MeasurementContext::matches(const CorrelationRow& row) const {
    if (row.operators.size() != axes_.size()) {
        throw StructuralError("row and context have different party counts");
    }
    for (std::size_t k = 0; k < axes_.size(); ++k) {
        if (row.operators[k] != PauliAxis::I && row.operators[k] != axes_[k]) {
            return false;
        }
    }
    return true;
}

std::vector<double> outcome_distribution(const StateVector& state,
                                         const MeasurementContext& context) {
    const std::size_t n = state.num_qubits();
    if (context.size() != n) {
        throw StructuralError("context length does not match state");
    }
    const std::size_t dim = state.dimension();
    const Complex imag_unit{0.0, 1.0};
    const std::size_t outcomes = std::size_t{1} << n;
    std::vector<double> probs(outcomes);
    std::vector<Complex> phi(dim);
    std::vector<Complex> next(dim);
    double total = 0.0;
    for (std::size_t o = 0; o < outcomes; ++o) {
        phi.assign(state.amplitudes().begin(), state.amplitudes().end());
        for (std::size_t k = 0; k < n; ++k) {
            const double s = ((o >> (n - 1 - k)) & 1U) != 0 ? -1.0 : 1.0;
            const std::size_t mask = std::size_t{1} << state.bit_of(k);
            // next = (phi + s * P_k phi) / 2
            for (std::size_t i = 0; i < dim; ++i) {
                const bool bit = (i & mask) != 0;
                Complex p_phi;
                switch (context[k]) {
                case PauliAxis::X:
                    p_phi = phi[i ^ mask];
                    break;
                case PauliAxis::Y:
                    // <i|Y|i^mask>: Y|0> = i|1>, Y|1> = -i|0>
                    p_phi = bit ? imag_unit * phi[i ^ mask] : -imag_unit * phi[i ^ mask];
                    break;
                default:
                    p_phi = bit ? -phi[i] : phi[i];
                    break;
                }
                next[i] = 0.5 * (phi[i] + s * p_phi);
            }
            phi.swap(next);
        }
        double p = 0.0;
        for (const auto& a : phi) {
            p += std::norm(a);
        }
        probs[o] = p;
        total += p;
    }
    if (std::abs(total - 1.0) > kNormalizationTolerance) {
        throw ConsistencyError("outcome probabilities sum to " + std::to_string(total));
    }
    for (auto& p : probs) {
        p = std::max(p, 0.0);
    }
    return probs;
}

std::vector<int> decode_outcomes(std::size_t index, std::size_t num_parties) {
    std::vector<int> out(num_parties);
    for (std::size_t k = 0; k < num_parties; ++k) {
        out[k] = ((index >> (num_parties - 1 - k)) & 1U) != 0 ? -1 : 1;
    }
    return out;
}

std::size_t sample_index(std::span<const double> distribution, ProtocolRng& rng) {
    if (distribution.empty()) {
        throw StructuralError("empty distribution");
    }
    const double u = rng.uniform_unit();
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < distribution.size(); ++i) {
        if (distribution[i] > 0.0) {
            last_positive = i;
        }
        cumulative += distribution[i];
        if (u < cumulative && distribution[i] > 0.0) {
            return i;
        }
    }
    return last_positive;
}

std::vector<int> sample_outcomes(const StateVector& state, const MeasurementContext& context,
                                 ProtocolRng& rng) {
    const auto dist = outcome_distribution(state, context);
    return decode_outcomes(sample_index(dist, rng), state.num_qubits());
}

RunRecord simulate_run(const StateVector& state, const CorrelationTable& table,
                       ProtocolRng& rng) {
    if (state.num_qubits() != table.num_parties()) {
        throw StructuralError("state and table have different party counts");
    }
    DistributionCache cache(state);
    return run_once(table, cache, rng);
}

ProtocolReport run_protocol(const StateVector& state, const CorrelationTable& table,
                            std::uint64_t num_runs, std::uint64_t seed, unsigned workers) {
    if (num_runs == 0) {
        throw StructuralError("num_runs must be at least 1");
    }
    if (state.num_qubits() != table.num_parties()) {
        throw StructuralError("state and table have different party counts");
    }
    workers = std::max(1U, workers);
    const std::uint64_t chunks = std::min<std::uint64_t>(workers, num_runs);

    std::vector<Tally> tallies(chunks, Tally(table.size(), table.num_parties()));
    auto work = [&](std::uint64_t chunk) {
        DistributionCache cache(state);
        const std::uint64_t begin = num_runs * chunk / chunks;
        const std::uint64_t end = num_runs * (chunk + 1) / chunks;
        for (std::uint64_t run = begin; run < end; ++run) {
            ProtocolRng rng(seed, run);
            tallies[chunk].add(run_once(table, cache, rng));
        }
    };
    if (chunks == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(chunks);
        for (std::uint64_t c = 0; c < chunks; ++c) {
            threads.emplace_back(work, c);
        }
    }

    Tally total(table.size(), table.num_parties());
    for (const auto& t : tallies) {
        total.merge(t);
    }

    ProtocolReport report;
    report.total_runs = num_runs;
    report.seed = seed;
    report.runs_with_match = total.runs_with_match;
    report.pass = true;
    for (std::size_t r = 0; r < table.size(); ++r) {
        RowStatistics s;
        s.row = r;
        s.expected_sign = table[r].expected_sign;
        s.plus = total.plus[r];
        s.minus = total.minus[r];
        s.samples = s.plus + s.minus;
        if (s.samples > 0) {
            const auto agree = s.expected_sign > 0 ? s.plus : s.minus;
            s.agreement_rate = static_cast<double>(agree) / static_cast<double>(s.samples);
            s.pass = agree == s.samples;
        }
        report.pass = report.pass && s.pass;
        report.rows.push_back(s);
    }
    for (std::size_t k = 0; k < table.num_parties(); ++k) {
        for (std::size_t a = 0; a < 3; ++a) {
            report.marginals.push_back({k, kMeasurableAxes[a], total.marginal_trials[k * 3 + a],
                                        total.marginal_plus[k * 3 + a]});
        }
    }
    return report;
}

double expected_match_rate(const CorrelationRow& row) {
    return std::pow(1.0 / 3.0, static_cast<double>(row.operators.weight()));
}

std::vector<double> expected_match_rates(const CorrelationTable& table) {
    std::vector<double> out;
    out.reserve(table.size());
    for (const auto& row : table.rows()) {
        out.push_back(expected_match_rate(row));
    }
    return out;
}

} // namespace mmes
