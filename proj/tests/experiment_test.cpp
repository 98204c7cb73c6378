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
#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "mmes/errors.hpp"
#include "mmes/experiment.hpp"
#include "oracles.hpp"

using namespace mmes;

namespace {

constexpr auto X = PauliAxis::X;

StateVector product_state() { return StateVector::basis(5, 0); }

} // namespace

TEST(ProtocolRng, DeterministicPerSeedAndStream) {
    ProtocolRng a(42, 3);
    ProtocolRng b(42, 3);
    ProtocolRng c(42, 4);
    bool differs = false;
    for (int i = 0; i < 64; ++i) {
        const auto va = a.next_u64();
        EXPECT_EQ(va, b.next_u64());
        differs = differs || va != c.next_u64();
    }
    EXPECT_TRUE(differs);
}

TEST(ProtocolRng, RangesAndUniformity) {
    ProtocolRng rng(1, 0);
    std::vector<int> hist(3, 0);
    for (int i = 0; i < 30000; ++i) {
        const auto v = rng.uniform_below(3);
        ASSERT_LT(v, 3u);
        ++hist[v];
        const double u = rng.uniform_unit();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
    for (int h : hist) {
        EXPECT_NEAR(h, 10000, 300);
    }
    EXPECT_EQ(rng.uniform_below(1), 0u);
}

TEST(MeasurementContext, ParseAndMatch) {
    const auto ctx = MeasurementContext::parse("zxxzz");
    EXPECT_EQ(ctx.as_pauli_string().to_string(), "ZXXZZ");
    EXPECT_TRUE(ctx.matches({PauliString::parse("ZXXII"), 1}));
    EXPECT_FALSE(ctx.matches({PauliString::parse("XZIZI"), 1}));
    EXPECT_THROW((void)MeasurementContext::parse("XIXXX"), StructuralError);
    EXPECT_THROW(MeasurementContext({}), StructuralError);
}

TEST(OutcomeDistribution, MatchesPauliExpansionOracle) {
    std::mt19937_64 gen(11);
    const auto psi = build_mmes5();
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<PauliAxis> axes(5);
        std::uniform_int_distribution<int> pick(1, 3);
        for (auto& a : axes) {
            a = static_cast<PauliAxis>(pick(gen));
        }
        const auto state = trial % 2 == 0 ? psi : oracle::random_state(5, gen);
        const auto got = outcome_distribution(state, MeasurementContext(axes));
        const auto want = oracle::fourier_distribution(state, axes);
        ASSERT_EQ(got.size(), want.size());
        for (std::size_t o = 0; o < got.size(); ++o) {
            EXPECT_NEAR(got[o], want[o], 1e-12);
        }
    }
}

TEST(DecodeOutcomes, PartyZeroIsMostSignificant) {
    EXPECT_EQ(decode_outcomes(0, 3), (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(decode_outcomes(4, 3), (std::vector<int>{-1, 1, 1}));
    EXPECT_EQ(decode_outcomes(1, 3), (std::vector<int>{1, 1, -1}));
}

TEST(SampleOutcomes, EigenstateIsDeterministic) {
    const auto basis = StateVector::basis(5, 0b10010);
    ProtocolRng rng(5, 0);
    const auto ctx = MeasurementContext::parse("ZZZZZ");
    for (int i = 0; i < 50; ++i) {
        EXPECT_EQ(sample_outcomes(basis, ctx, rng), (std::vector<int>{-1, 1, 1, -1, 1}));
    }
}

TEST(SampleOutcomes, StabilizerProductIsPinned) {
    // ZXXZZ covers ZXXII (+1) and IIXZZ (+1); the outcome product of the
    // matching parties is fixed for every shot.
    const auto psi = build_mmes5();
    const auto ctx = MeasurementContext::parse("ZXXZZ");
    ProtocolRng rng(9, 0);
    for (int i = 0; i < 500; ++i) {
        const auto o = sample_outcomes(psi, ctx, rng);
        EXPECT_EQ(o[0] * o[1] * o[2], 1);
        EXPECT_EQ(o[2] * o[3] * o[4], 1);
    }
}

TEST(SampleOutcomes, FrequenciesWithinThreeSigma) {
    const auto psi = build_mmes5();
    const std::vector<PauliAxis> axes(5, X);
    const auto want = oracle::fourier_distribution(psi, axes);
    const auto ctx = MeasurementContext(axes);
    const auto dist = outcome_distribution(psi, ctx);
    ProtocolRng rng(42, 0);
    constexpr int kShots = 10000;
    std::vector<int> counts(want.size(), 0);
    for (int i = 0; i < kShots; ++i) {
        ++counts[sample_index(dist, rng)];
    }
    for (std::size_t o = 0; o < want.size(); ++o) {
        const double mean = kShots * want[o];
        const double sigma = std::sqrt(kShots * want[o] * (1.0 - want[o]));
        EXPECT_LE(std::abs(counts[o] - mean), 3.0 * sigma + 1e-9) << "outcome " << o;
    }
}

TEST(ExpectedMatchRate, PowersOfThree) {
    EXPECT_DOUBLE_EQ(expected_match_rate({PauliString::parse("ZXXII"), 1}), 1.0 / 27.0);
    EXPECT_DOUBLE_EQ(expected_match_rate({PauliString::parse("XXZXZ"), -1}), 1.0 / 243.0);
    const auto rates = expected_match_rates(canonical_table());
    EXPECT_DOUBLE_EQ(*std::min_element(rates.begin(), rates.end()), 1.0 / 243.0);
}

TEST(RunProtocol, MmesAgreesWithEveryRow) {
    const auto report = run_protocol(build_mmes5(), canonical_table(), 20000, 7);
    EXPECT_TRUE(report.pass);
    EXPECT_EQ(report.total_runs, 20000u);
    ASSERT_EQ(report.rows.size(), 16u);
    for (const auto& r : report.rows) {
        EXPECT_TRUE(r.pass);
        EXPECT_EQ(r.samples, r.plus + r.minus);
        ASSERT_TRUE(r.agreement_rate);
        EXPECT_DOUBLE_EQ(*r.agreement_rate, 1.0);
        EXPECT_EQ(r.expected_sign > 0 ? r.minus : r.plus, 0u);
    }
}

TEST(RunProtocol, ProductStateFails) {
    const auto report = run_protocol(product_state(), canonical_table(), 20000, 7);
    EXPECT_FALSE(report.pass);
}

TEST(RunProtocol, SingleRunAndZeroRuns) {
    const auto report = run_protocol(build_mmes5(), canonical_table(), 1, 42);
    EXPECT_EQ(report.total_runs, 1u);
    for (const auto& r : report.rows) {
        EXPECT_LE(r.samples, 1u);
        if (r.samples == 0) {
            EXPECT_FALSE(r.agreement_rate);
        }
    }
    EXPECT_LE(report.runs_with_match, 1u);
    EXPECT_THROW((void)run_protocol(build_mmes5(), canonical_table(), 0, 42), StructuralError);
}

TEST(RunProtocol, IndependentOfWorkerCount) {
    const auto psi = build_mmes5();
    const auto t = canonical_table();
    const auto a = run_protocol(psi, t, 5000, 123, 1);
    const auto b = run_protocol(psi, t, 5000, 123, 3);
    const auto c = run_protocol(psi, t, 5000, 123, 8);
    for (const auto* other : {&b, &c}) {
        EXPECT_EQ(a.runs_with_match, other->runs_with_match);
        for (std::size_t r = 0; r < a.rows.size(); ++r) {
            EXPECT_EQ(a.rows[r].samples, other->rows[r].samples);
            EXPECT_EQ(a.rows[r].plus, other->rows[r].plus);
        }
        for (std::size_t m = 0; m < a.marginals.size(); ++m) {
            EXPECT_EQ(a.marginals[m].trials, other->marginals[m].trials);
            EXPECT_EQ(a.marginals[m].plus, other->marginals[m].plus);
        }
    }
    const auto d = run_protocol(psi, t, 5000, 124, 1);
    bool differs = false;
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
        differs = differs || a.rows[r].samples != d.rows[r].samples;
    }
    EXPECT_TRUE(differs);
}

TEST(RunProtocol, MarginalsAreUnbiased) {
    const auto report = run_protocol(build_mmes5(), canonical_table(), 30000, 42, 4);
    ASSERT_EQ(report.marginals.size(), 15u);
    for (const auto& m : report.marginals) {
        ASSERT_GT(m.trials, 0u);
        const double n = static_cast<double>(m.trials);
        const double sigma = std::sqrt(n * 0.25);
        EXPECT_LE(std::abs(static_cast<double>(m.plus) - n / 2.0), 3.5 * sigma)
            << "party " << m.party << " axis " << to_char(m.axis);
    }
}

TEST(SimulateRun, MatchedRowsHaveExpectedProducts) {
    const auto psi = build_mmes5();
    const auto t = canonical_table();
    ProtocolRng rng(77, 0);
    for (int i = 0; i < 2000; ++i) {
        const auto rec = simulate_run(psi, t, rng);
        ASSERT_EQ(rec.matched_rows.size(), rec.products.size());
        for (const auto& [row, product] : rec.products) {
            EXPECT_TRUE(rec.context.matches(t[row]));
            EXPECT_EQ(product, t[row].expected_sign);
        }
    }
}
