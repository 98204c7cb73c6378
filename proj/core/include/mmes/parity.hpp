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
#include <span>
#include <vector>

#include "mmes/pauli.hpp"

namespace mmes {

/// A dichotomic hidden variable: the predetermined +-1 outcome of measuring
/// `axis` at `party`. Context 0 marks a context-independent variable; other
/// values tag a per-equation copy.
struct HVVariable {
    std::size_t party = 0;
    PauliAxis axis = PauliAxis::X;
    std::size_t context = 0;

    friend bool operator==(const HVVariable&, const HVVariable&) = default;
};

/// XOR of the listed bits equals `target`. A sign equation prod v = s maps to
/// this form through v = (-1)^b, giving target = (1 - s) / 2.
struct ParityEquation {
    std::vector<std::size_t> vars;
    bool target = false;
};

/// Linear system over GF(2).
class ParitySystem {
  public:
    ParitySystem() = default;

    /// Variable lists are reduced mod 2 (a repeated index cancels) and sorted.
    /// Throws StructuralError on an index >= num_vars or a name list whose
    /// length is neither 0 nor num_vars.
    ParitySystem(std::size_t num_vars, std::vector<ParityEquation> equations,
                 std::vector<HVVariable> var_names = {});

    [[nodiscard]] std::size_t num_vars() const noexcept { return num_vars_; }
    [[nodiscard]] std::size_t num_equations() const noexcept {
        return equations_.size();
    }
    [[nodiscard]] const std::vector<ParityEquation>& equations() const noexcept {
        return equations_;
    }
    [[nodiscard]] const ParityEquation& operator[](std::size_t i) const {
        return equations_[i];
    }
    [[nodiscard]] const std::vector<HVVariable>& var_names() const noexcept {
        return var_names_;
    }

    /// Index of the named variable, if present.
    [[nodiscard]] std::optional<std::size_t>
    find_variable(std::size_t party, PauliAxis axis, std::size_t context) const;

    /// Subsystem made of the listed equations, same variables.
    [[nodiscard]] ParitySystem restrict_to(std::span<const std::size_t> rows) const;

  private:
    std::size_t num_vars_ = 0;
    std::vector<ParityEquation> equations_;
    std::vector<HVVariable> var_names_;
};

/// Outcome of a satisfiability decision. Witness entries are +-1 values, one
/// per variable; a certificate lists equation indices whose sum is 0 = 1.
struct Verdict {
    bool satisfiable = false;
    std::optional<std::vector<int>> witness;
    std::optional<std::vector<std::size_t>> certificate;
};

/// True iff every equation's +-1 product matches its sign.
[[nodiscard]] bool witness_satisfies(const ParitySystem& system,
                                     std::span<const int> witness);

/// True iff the listed equations (distinct, in range) have variable sets that
/// cancel completely while their targets sum to 1.
[[nodiscard]] bool is_contradiction(const ParitySystem& system,
                                    std::span<const std::size_t> equations);

/// Checks the Verdict invariants against the original system with the two
/// verifiers above. Throws ConsistencyError on any violation.
void check_verdict(const ParitySystem& system, const Verdict& verdict);

/// Gauss-Jordan elimination with row-combination logging. Satisfiable systems
/// get a witness with free variables at +1; unsatisfiable ones get a minimal
/// certificate (no proper subset is contradictory). Both are re-verified.
[[nodiscard]] Verdict solve_gf2(const ParitySystem& system);

inline constexpr std::size_t kMaxEnumeratedVars = 24;

/// Exhaustive enumeration. Returns the lexicographically first satisfying
/// assignment (bit 0 before bit 1, lower variable index more significant),
/// never a certificate. Equations sharing no variables are enumerated
/// separately; throws CapabilityError if any connected block has more than
/// kMaxEnumeratedVars variables.
[[nodiscard]] Verdict solve_bruteforce(const ParitySystem& system);

/// Number of assignments solve_bruteforce walks through in the worst case,
/// summed over independent blocks.
[[nodiscard]] std::size_t enumeration_size(const ParitySystem& system);

} // namespace mmes
