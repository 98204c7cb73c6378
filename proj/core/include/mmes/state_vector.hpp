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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "mmes/pauli.hpp"

namespace mmes {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 12;

/// Normalized dense pure state of n qubits. Qubit 0 (party A) is the most
/// significant bit of the basis index, so |01011> is index 11.
class StateVector {
  public:
    /// Returns a normalized copy of `amplitudes`. Throws StructuralError on a
    /// length other than 2^num_qubits and DegenerateInputError on zero norm.
    static StateVector make(std::size_t num_qubits,
                            std::span<const Complex> amplitudes);

    /// Computational basis state |index>.
    static StateVector basis(std::size_t num_qubits, std::size_t index);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] Complex operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] double norm_squared() const noexcept;

    /// Bit position of qubit `q` inside a basis index.
    [[nodiscard]] std::size_t bit_of(std::size_t q) const noexcept {
        return num_qubits_ - 1 - q;
    }

  private:
    StateVector(std::size_t n, std::vector<Complex> amps)
        : num_qubits_(n), amps_(std::move(amps)) {}

    friend StateVector apply_pauli_string(const StateVector&, const PauliString&);

    std::size_t num_qubits_ = 0;
    std::vector<Complex> amps_;
};

/// P|psi> by bit-indexed traversal. Not renormalized.
[[nodiscard]] StateVector apply_pauli_string(const StateVector& state,
                                             const PauliString& p);

/// Re<psi|P|psi>. Throws ConsistencyError if the imaginary part exceeds 1e-12.
[[nodiscard]] double expectation(const StateVector& state, const PauliString& p);

/// Tr(rho_K^2) for the reduced state on `kept_qubits`, computed by splitting
/// basis indices into kept and traced bits. Duplicate indices are ignored.
/// The set must be nonempty and a strict subset of all qubits.
[[nodiscard]] double subsystem_purity(const StateVector& state,
                                      std::span<const std::size_t> kept_qubits);

/// Inner product <a|b>.
[[nodiscard]] Complex inner_product(const StateVector& a, const StateVector& b);

namespace dense {

inline constexpr std::size_t kMaxOracleQubits = 8;

/// Explicit Kronecker-product matrix of `p`, row-major 2^n x 2^n.
[[nodiscard]] std::vector<Complex> pauli_matrix(const PauliString& p);

/// Same contract as mmes::expectation, computed through the materialized
/// matrix. Throws CapabilityError above kMaxOracleQubits.
[[nodiscard]] double expectation(const StateVector& state, const PauliString& p);

/// Full |psi><psi|, then an explicit partial trace and a matrix square.
[[nodiscard]] double subsystem_purity(const StateVector& state,
                                      std::span<const std::size_t> kept_qubits);

} // namespace dense

} // namespace mmes
