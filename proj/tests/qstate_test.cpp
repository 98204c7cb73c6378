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

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "mmes/correlations.hpp"
#include "mmes/errors.hpp"
#include "mmes/state_vector.hpp"
#include "oracles.hpp"

using namespace mmes;

namespace {

StateVector ket(std::initializer_list<Complex> amps) {
    std::vector<Complex> v(amps);
    const auto n = static_cast<std::size_t>(std::log2(v.size()));
    return StateVector::make(n, v);
}

} // namespace

TEST(PauliString, ParsesTextFormAndIdentityAlias) {
    EXPECT_EQ(PauliString::parse("ZXXII").to_string(), "ZXXII");
    EXPECT_EQ(PauliString::parse("ZXX11"), PauliString::parse("ZXXII"));
    EXPECT_EQ(PauliString::parse("zxxii").weight(), 3u);
    EXPECT_THROW((void)PauliString::parse("ZXQII"), StructuralError);
    EXPECT_THROW((void)PauliString::parse(""), StructuralError);
}

TEST(StateVector, MakeNormalizes) {
    const auto zero = ket({1.0, 0.0});
    EXPECT_EQ(zero[0], Complex(1.0));
    EXPECT_EQ(zero[1], Complex(0.0));

    const auto scaled = ket({2.0, 0.0});
    EXPECT_DOUBLE_EQ(scaled[0].real(), 1.0);
    EXPECT_DOUBLE_EQ(scaled[1].real(), 0.0);
}

TEST(StateVector, MakeRejectsBadInput) {
    const std::vector<Complex> three(3, 1.0);
    EXPECT_THROW((void)StateVector::make(2, three), StructuralError);
    const std::vector<Complex> zeros(4, 0.0);
    EXPECT_THROW((void)StateVector::make(2, zeros), DegenerateInputError);
    EXPECT_THROW((void)StateVector::make(13, zeros), StructuralError);
}

TEST(StateVector, FiveQubitStateFromUnscaledSigns) {
    const auto psi = build_mmes5();
    EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-12);
    for (const auto& a : psi.amplitudes()) {
        EXPECT_NEAR(std::abs(a), 1.0 / std::sqrt(32.0), 1e-12);
    }
}

TEST(ApplyPauliString, SingleQubitActions) {
    const auto zero = StateVector::basis(1, 0);
    const auto one = StateVector::basis(1, 1);

    const auto z0 = apply_pauli_string(zero, PauliString::parse("Z"));
    EXPECT_EQ(z0[0], Complex(1.0));
    EXPECT_EQ(z0[1], Complex(0.0));

    const auto x0 = apply_pauli_string(zero, PauliString::parse("X"));
    EXPECT_EQ(x0[0], Complex(0.0));
    EXPECT_EQ(x0[1], Complex(1.0));

    // Y|0> = i|1>, Y|1> = -i|0>
    const auto y0 = apply_pauli_string(zero, PauliString::parse("Y"));
    EXPECT_EQ(y0[1], Complex(0.0, 1.0));
    const auto y1 = apply_pauli_string(one, PauliString::parse("Y"));
    EXPECT_EQ(y1[0], Complex(0.0, -1.0));
}

TEST(ApplyPauliString, QubitZeroIsMostSignificant) {
    // X on party A of |00> gives |10>, index 2.
    const auto out = apply_pauli_string(StateVector::basis(2, 0), PauliString::parse("XI"));
    EXPECT_EQ(out[2], Complex(1.0));
}

TEST(ApplyPauliString, StabilizesFiveQubitState) {
    const auto psi = build_mmes5();
    const auto s = apply_pauli_string(psi, PauliString::parse("ZXXII"));
    const auto overlap = inner_product(psi, s);
    EXPECT_NEAR(overlap.real(), 1.0, 1e-12);
    EXPECT_NEAR(overlap.imag(), 0.0, 1e-12);
}

TEST(ApplyPauliString, LengthMismatchIsStructural) {
    EXPECT_THROW((void)apply_pauli_string(StateVector::basis(2, 0), PauliString::parse("X")),
                 StructuralError);
    EXPECT_THROW((void)expectation(StateVector::basis(2, 0), PauliString::parse("XXX")),
                 StructuralError);
}

TEST(ApplyPauliString, SquareIsIdentity) {
    std::mt19937_64 gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const auto psi = oracle::random_state(n, gen);
        const auto p = oracle::random_pauli(n, gen);
        const auto twice = apply_pauli_string(apply_pauli_string(psi, p), p);
        for (std::size_t i = 0; i < psi.dimension(); ++i) {
            ASSERT_NEAR(std::abs(twice[i] - psi[i]), 0.0, 1e-12) << p.to_string();
        }
    }
}

TEST(Expectation, IdentityAndStabilizers) {
    const auto psi = build_mmes5();
    EXPECT_NEAR(expectation(psi, PauliString::parse("IIIII")), 1.0, 1e-12);
    EXPECT_NEAR(expectation(psi, PauliString::parse("ZXXII")), 1.0, 1e-12);
}

TEST(Expectation, FrozenDenseOracleValue) {
    // Dense Kronecker oracle gives <XXXXX> = 0 on the five-qubit state.
    const auto psi = build_mmes5();
    const auto p = PauliString::parse("XXXXX");
    const double oracle = dense::expectation(psi, p);
    EXPECT_NEAR(oracle, 0.0, 1e-12);
    EXPECT_NEAR(expectation(psi, p), oracle, 1e-12);
}

TEST(ExpectationDense, Examples) {
    EXPECT_NEAR(dense::expectation(StateVector::basis(1, 0), PauliString::parse("Z")), 1.0,
                1e-12);
    EXPECT_NEAR(dense::expectation(build_mmes5(), PauliString::parse("YYIIZ")), 1.0, 1e-12);
}

TEST(ExpectationDense, RefusesLargeStates) {
    const auto big = StateVector::basis(9, 0);
    EXPECT_THROW((void)dense::expectation(big, PauliString::identity(9)), CapabilityError);
    EXPECT_THROW((void)dense::pauli_matrix(PauliString::identity(9)), CapabilityError);
}

TEST(Expectation, KernelMatchesDenseOracleOnRandomInputs) {
    std::mt19937_64 gen(20260101);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const auto psi = oracle::random_state(n, gen);
        const auto p = oracle::random_pauli(n, gen);
        const double fast = expectation(psi, p);
        ASSERT_NEAR(fast, dense::expectation(psi, p), 1e-10) << p.to_string();
        ASSERT_LE(std::abs(fast), 1.0 + 1e-12);
        ASSERT_NEAR(expectation(psi, PauliString::identity(n)), 1.0, 1e-12);
    }
}

TEST(SubsystemPurity, ProductStateIsPure) {
    const auto product = StateVector::basis(2, 0);
    const std::vector<std::size_t> kept{0};
    EXPECT_NEAR(subsystem_purity(product, kept), 1.0, 1e-12);
}

TEST(SubsystemPurity, FiveQubitStateMatchesDenseOracle) {
    const auto psi = build_mmes5();
    const std::vector<std::size_t> a{0};
    const std::vector<std::size_t> bd{1, 3};
    // Dense partial trace: 0.5 and 0.25 (up to rounding).
    EXPECT_NEAR(dense::subsystem_purity(psi, a), 0.5, 1e-12);
    EXPECT_NEAR(dense::subsystem_purity(psi, bd), 0.25, 1e-12);
    EXPECT_NEAR(subsystem_purity(psi, a), 0.5, 1e-12);
    EXPECT_NEAR(subsystem_purity(psi, bd), 0.25, 1e-12);
}

TEST(SubsystemPurity, RejectsEmptyAndFullSets) {
    const auto psi = build_mmes5();
    const std::vector<std::size_t> none;
    const std::vector<std::size_t> all{0, 1, 2, 3, 4};
    const std::vector<std::size_t> out_of_range{7};
    EXPECT_THROW((void)subsystem_purity(psi, none), StructuralError);
    EXPECT_THROW((void)subsystem_purity(psi, all), StructuralError);
    EXPECT_THROW((void)subsystem_purity(psi, out_of_range), StructuralError);
    EXPECT_THROW((void)dense::subsystem_purity(psi, all), StructuralError);
}

TEST(SubsystemPurity, SetHandlingAndBoundsOnRandomStates) {
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const auto psi = oracle::random_state(n, gen);
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        const std::size_t q = pick(gen);
        const std::vector<std::size_t> single{q};
        const std::vector<std::size_t> repeated{q, q, q};
        const double p1 = subsystem_purity(psi, single);
        EXPECT_DOUBLE_EQ(p1, subsystem_purity(psi, repeated));
        EXPECT_GE(p1, 0.5 - 1e-12);
        EXPECT_LE(p1, 1.0 + 1e-12);

        // Complement of the complement, and agreement with the dense path.
        std::vector<std::size_t> kept;
        std::vector<std::size_t> complement;
        for (std::size_t k = 0; k < n; ++k) {
            ((k % 2 == 0) ? kept : complement).push_back(k);
        }
        std::vector<std::size_t> back;
        for (std::size_t k = 0; k < n; ++k) {
            if (std::find(complement.begin(), complement.end(), k) == complement.end()) {
                back.push_back(k);
            }
        }
        EXPECT_DOUBLE_EQ(subsystem_purity(psi, kept), subsystem_purity(psi, back));
        EXPECT_NEAR(subsystem_purity(psi, kept), dense::subsystem_purity(psi, kept), 1e-12);
        // Pure global state: both sides of a bipartition share the purity.
        EXPECT_NEAR(subsystem_purity(psi, kept), subsystem_purity(psi, complement), 1e-12);
    }
}
