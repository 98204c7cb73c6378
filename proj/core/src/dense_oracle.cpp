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
#include <array>
#include <string>

#include "mmes/errors.hpp"
#include "mmes/state_vector.hpp"
#include "subsystem.hpp"

namespace mmes::dense {
namespace {

using Matrix2 = std::array<Complex, 4>;

Matrix2 single_qubit(PauliAxis axis) {
    const Complex i{0.0, 1.0};
    switch (axis) {
    case PauliAxis::X:
        return {0.0, 1.0, 1.0, 0.0};
    case PauliAxis::Y:
        return {0.0, -i, i, 0.0};
    case PauliAxis::Z:
        return {1.0, 0.0, 0.0, -1.0};
    case PauliAxis::I:
        break;
    }
    return {1.0, 0.0, 0.0, 1.0};
}

void require_oracle_size(std::size_t num_qubits) {
    if (num_qubits > kMaxOracleQubits) {
        throw CapabilityError("dense oracle supports at most " +
                              std::to_string(kMaxOracleQubits) + " qubits, got " +
                              std::to_string(num_qubits));
    }
}

} // namespace

std::vector<Complex> pauli_matrix(const PauliString& p) {
    require_oracle_size(p.size());
    // Kronecker product with the first factor outermost.
    std::vector<Complex> acc{1.0};
    std::size_t dim = 1;
    for (auto axis : p) {
        const auto m = single_qubit(axis);
        const std::size_t next_dim = dim * 2;
        std::vector<Complex> next(next_dim * next_dim);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
                const Complex a = acc[r * dim + c];
                for (std::size_t rr = 0; rr < 2; ++rr) {
                    for (std::size_t cc = 0; cc < 2; ++cc) {
                        next[(r * 2 + rr) * next_dim + (c * 2 + cc)] = a * m[rr * 2 + cc];
                    }
                }
            }
        }
        acc = std::move(next);
        dim = next_dim;
    }
    return acc;
}

double expectation(const StateVector& state, const PauliString& p) {
    if (p.size() != state.num_qubits()) {
        throw StructuralError("Pauli string length does not match state");
    }
    require_oracle_size(state.num_qubits());
    const auto matrix = pauli_matrix(p);
    const std::size_t dim = state.dimension();
    Complex acc{};
    for (std::size_t r = 0; r < dim; ++r) {
        Complex row{};
        for (std::size_t c = 0; c < dim; ++c) {
            row += matrix[r * dim + c] * state[c];
        }
        acc += std::conj(state[r]) * row;
    }
    if (std::abs(acc.imag()) > 1e-12) {
        throw ConsistencyError("dense expectation of " + p.to_string() +
                               " is not real");
    }
    return acc.real();
}

double subsystem_purity(const StateVector& state,
                        std::span<const std::size_t> kept_qubits) {
    require_oracle_size(state.num_qubits());
    const auto kept = mmes::detail::normalize_subsystem(state.num_qubits(), kept_qubits);
    const std::size_t n = state.num_qubits();
    const std::size_t dim = state.dimension();

    std::vector<std::size_t> traced;
    for (std::size_t q = 0; q < n; ++q) {
        if (std::find(kept.begin(), kept.end(), q) == kept.end()) {
            traced.push_back(q);
        }
    }

    std::vector<Complex> rho(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            rho[r * dim + c] = state[r] * std::conj(state[c]);
        }
    }

    // Full basis index from a kept-register value and a traced-register value,
    // each read with its first listed qubit as the most significant bit.
    auto compose = [&](std::size_t kept_value, std::size_t traced_value) {
        std::size_t index = 0;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            const std::size_t bit = (kept_value >> (kept.size() - 1 - j)) & 1U;
            index |= bit << (n - 1 - kept[j]);
        }
        for (std::size_t j = 0; j < traced.size(); ++j) {
            const std::size_t bit = (traced_value >> (traced.size() - 1 - j)) & 1U;
            index |= bit << (n - 1 - traced[j]);
        }
        return index;
    };

    const std::size_t kd = std::size_t{1} << kept.size();
    const std::size_t td = std::size_t{1} << traced.size();
    std::vector<Complex> reduced(kd * kd);
    for (std::size_t a = 0; a < kd; ++a) {
        for (std::size_t b = 0; b < kd; ++b) {
            for (std::size_t t = 0; t < td; ++t) {
                reduced[a * kd + b] += rho[compose(a, t) * dim + compose(b, t)];
            }
        }
    }

    Complex trace{};
    for (std::size_t a = 0; a < kd; ++a) {
        for (std::size_t b = 0; b < kd; ++b) {
            trace += reduced[a * kd + b] * reduced[b * kd + a];
        }
    }
    return trace.real();
}

} // namespace mmes::dense
