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

#include "mmes/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "mmes/errors.hpp"
#include "subsystem.hpp"

namespace mmes {
namespace {

constexpr double kHermiticityTolerance = 1e-12;

void require_length(const StateVector& state, const PauliString& p) {
    if (p.size() != state.num_qubits()) {
        throw StructuralError("Pauli string of length " + std::to_string(p.size()) +
                              " applied to " + std::to_string(state.num_qubits()) +
                              "-qubit state");
    }
}

// Bit masks of a Pauli string in basis-index coordinates.
struct PauliMasks {
    std::size_t flip = 0;  // X or Y
    std::size_t phase = 0; // Z or Y: contributes (-1)^bit of the input
    unsigned num_y = 0;
};

PauliMasks masks_of(const StateVector& state, const PauliString& p) {
    PauliMasks m;
    for (std::size_t q = 0; q < p.size(); ++q) {
        const std::size_t bit = std::size_t{1} << state.bit_of(q);
        switch (p[q]) {
        case PauliAxis::X:
            m.flip |= bit;
            break;
        case PauliAxis::Y:
            m.flip |= bit;
            m.phase |= bit;
            ++m.num_y;
            break;
        case PauliAxis::Z:
            m.phase |= bit;
            break;
        case PauliAxis::I:
            break;
        }
    }
    return m;
}

// i^k for k mod 4.
Complex i_power(unsigned k) {
    switch (k % 4) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

} // namespace

StateVector StateVector::make(std::size_t num_qubits,
                              std::span<const Complex> amplitudes) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw StructuralError("num_qubits must be in [1, " +
                              std::to_string(kMaxQubits) + "], got " +
                              std::to_string(num_qubits));
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (amplitudes.size() != dim) {
        throw StructuralError("expected " + std::to_string(dim) +
                              " amplitudes, got " +
                              std::to_string(amplitudes.size()));
    }
    double norm2 = 0.0;
    for (const auto& a : amplitudes) {
        norm2 += std::norm(a);
    }
    if (!(norm2 > 0.0) || !std::isfinite(norm2)) {
        throw DegenerateInputError("state has zero or non-finite norm");
    }
    const double scale = 1.0 / std::sqrt(norm2);
    std::vector<Complex> amps(amplitudes.begin(), amplitudes.end());
    for (auto& a : amps) {
        a *= scale;
    }
    return StateVector(num_qubits, std::move(amps));
}

StateVector StateVector::basis(std::size_t num_qubits, std::size_t index) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw StructuralError("num_qubits out of range");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw StructuralError("basis index out of range");
    }
    std::vector<Complex> amps(dim);
    amps[index] = 1.0;
    return StateVector(num_qubits, std::move(amps));
}

double StateVector::norm_squared() const noexcept {
    return std::accumulate(amps_.begin(), amps_.end(), 0.0,
                           [](double acc, const Complex& a) { return acc + std::norm(a); });
}

StateVector apply_pauli_string(const StateVector& state, const PauliString& p) {
    require_length(state, p);
    const auto m = masks_of(state, p);
    const Complex global = i_power(m.num_y);
    std::vector<Complex> out(state.dimension());
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        // Z|b> = (-1)^b |b>, Y|b> = i (-1)^b |1-b>.
        const bool odd = (std::popcount(i & m.phase) & 1) != 0;
        const Complex amp = odd ? -state[i] : state[i];
        out[i ^ m.flip] = global * amp;
    }
    return StateVector(state.num_qubits(), std::move(out));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.dimension() != b.dimension()) {
        throw StructuralError("inner product of states with different sizes");
    }
    Complex acc{};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double expectation(const StateVector& state, const PauliString& p) {
    require_length(state, p);
    const auto m = masks_of(state, p);
    Complex acc{};
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        const bool odd = (std::popcount(i & m.phase) & 1) != 0;
        const Complex term = std::conj(state[i ^ m.flip]) * state[i];
        acc += odd ? -term : term;
    }
    acc *= i_power(m.num_y);
    if (std::abs(acc.imag()) > kHermiticityTolerance) {
        throw ConsistencyError("expectation of " + p.to_string() +
                               " has imaginary part " + std::to_string(acc.imag()));
    }
    return acc.real();
}

namespace detail {

std::vector<std::size_t> normalize_subsystem(std::size_t num_qubits,
                                             std::span<const std::size_t> kept) {
    std::vector<std::size_t> qubits(kept.begin(), kept.end());
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    if (qubits.empty()) {
        throw StructuralError("kept subsystem is empty");
    }
    if (qubits.back() >= num_qubits) {
        throw StructuralError("kept qubit index out of range");
    }
    if (qubits.size() == num_qubits) {
        throw StructuralError("kept subsystem must be a strict subset");
    }
    return qubits;
}

} // namespace detail

double subsystem_purity(const StateVector& state,
                        std::span<const std::size_t> kept_qubits) {
    const auto kept = detail::normalize_subsystem(state.num_qubits(), kept_qubits);
    const std::size_t n = state.num_qubits();
    std::vector<bool> is_kept(n, false);
    for (auto q : kept) {
        is_kept[q] = true;
    }

    // Reshape psi into M[k][t] with k over kept bits and t over traced bits,
    // then rho_K = M M^dagger and Tr(rho_K^2) = sum |rho_K[a][b]|^2.
    const std::size_t kept_dim = std::size_t{1} << kept.size();
    const std::size_t traced_dim = state.dimension() / kept_dim;
    std::vector<Complex> reshaped(state.dimension());
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        std::size_t k = 0;
        std::size_t t = 0;
        for (std::size_t q = 0; q < n; ++q) {
            const std::size_t bit = (i >> state.bit_of(q)) & 1U;
            if (is_kept[q]) {
                k = (k << 1) | bit;
            } else {
                t = (t << 1) | bit;
            }
        }
        reshaped[k * traced_dim + t] = state[i];
    }

    double purity = 0.0;
    for (std::size_t a = 0; a < kept_dim; ++a) {
        for (std::size_t b = 0; b < kept_dim; ++b) {
            Complex rho_ab{};
            for (std::size_t t = 0; t < traced_dim; ++t) {
                rho_ab += reshaped[a * traced_dim + t] *
                          std::conj(reshaped[b * traced_dim + t]);
            }
            purity += std::norm(rho_ab);
        }
    }
    return purity;
}

} // namespace mmes
