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

#include "mmes/parity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "mmes/errors.hpp"

namespace mmes {
namespace {

// Fixed-width bit row for elimination.
class BitRow {
  public:
    BitRow() = default;
    explicit BitRow(std::size_t bits) : words_((bits + 63) / 64, 0) {}

    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    [[nodiscard]] bool test(std::size_t i) const {
        return ((words_[i / 64] >> (i % 64)) & 1U) != 0;
    }
    BitRow& operator^=(const BitRow& other) {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    [[nodiscard]] bool none() const {
        return std::all_of(words_.begin(), words_.end(),
                           [](std::uint64_t w) { return w == 0; });
    }
    [[nodiscard]] std::vector<std::size_t> ones() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits != 0) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

  private:
    std::vector<std::uint64_t> words_;
};

struct EliminationResult {
    bool satisfiable = true;
    std::vector<int> witness;              // when satisfiable
    std::vector<std::size_t> certificate;  // when not
};

EliminationResult eliminate(const ParitySystem& system) {
    const std::size_t m = system.num_equations();
    const std::size_t n = system.num_vars();
    std::vector<BitRow> coeffs(m, BitRow(n));
    std::vector<bool> targets(m);
    std::vector<BitRow> combos(m, BitRow(m));
    for (std::size_t r = 0; r < m; ++r) {
        for (auto v : system[r].vars) {
            coeffs[r].flip(v);
        }
        targets[r] = system[r].target;
        combos[r].flip(r);
    }

    std::vector<std::size_t> pivot_row_of(n, m);
    std::size_t next = 0;
    for (std::size_t col = 0; col < n && next < m; ++col) {
        std::size_t pivot = next;
        while (pivot < m && !coeffs[pivot].test(col)) {
            ++pivot;
        }
        if (pivot == m) {
            continue;
        }
        std::swap(coeffs[pivot], coeffs[next]);
        std::swap(combos[pivot], combos[next]);
        {
            const bool t = targets[pivot];
            targets[pivot] = targets[next];
            targets[next] = t;
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (r != next && coeffs[r].test(col)) {
                coeffs[r] ^= coeffs[next];
                combos[r] ^= combos[next];
                targets[r] = targets[r] != targets[next];
            }
        }
        pivot_row_of[col] = next;
        ++next;
    }

    EliminationResult out;
    for (std::size_t r = next; r < m; ++r) {
        if (targets[r]) {
            out.satisfiable = false;
            out.certificate = combos[r].ones();
            return out;
        }
    }
    // Reduced row echelon form: with free variables at bit 0, each pivot
    // variable equals its row target.
    out.witness.assign(n, 1);
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_row_of[col] < m && targets[pivot_row_of[col]]) {
            out.witness[col] = -1;
        }
    }
    return out;
}

// Shrinks a contradictory subset until every proper subset is satisfiable.
std::vector<std::size_t> minimize_certificate(const ParitySystem& system,
                                              std::vector<std::size_t> cert) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t drop = 0; drop < cert.size(); ++drop) {
            std::vector<std::size_t> rest;
            rest.reserve(cert.size() - 1);
            for (std::size_t j = 0; j < cert.size(); ++j) {
                if (j != drop) {
                    rest.push_back(cert[j]);
                }
            }
            const auto sub = eliminate(system.restrict_to(rest));
            if (!sub.satisfiable) {
                std::vector<std::size_t> mapped;
                mapped.reserve(sub.certificate.size());
                for (auto local : sub.certificate) {
                    mapped.push_back(rest[local]);
                }
                std::sort(mapped.begin(), mapped.end());
                cert = std::move(mapped);
                changed = true;
                break;
            }
        }
    }
    return cert;
}

// Connected blocks of equations that share variables (union-find on vars).
struct Blocks {
    std::vector<std::vector<std::size_t>> vars;
    std::vector<std::vector<std::size_t>> equations;
    std::vector<std::size_t> constant_equations; // no variables at all
};

Blocks partition_blocks(const ParitySystem& system) {
    const std::size_t n = system.num_vars();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& eq : system.equations()) {
        for (std::size_t j = 1; j < eq.vars.size(); ++j) {
            parent[find(eq.vars[j])] = find(eq.vars[0]);
        }
    }

    Blocks blocks;
    std::vector<std::size_t> block_of_root(n, n);
    std::vector<bool> used(n, false);
    for (const auto& eq : system.equations()) {
        for (auto v : eq.vars) {
            used[v] = true;
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (!used[v]) {
            continue;
        }
        const auto root = find(v);
        if (block_of_root[root] == n) {
            block_of_root[root] = blocks.vars.size();
            blocks.vars.emplace_back();
            blocks.equations.emplace_back();
        }
        blocks.vars[block_of_root[root]].push_back(v);
    }
    for (std::size_t r = 0; r < system.num_equations(); ++r) {
        const auto& eq = system[r];
        if (eq.vars.empty()) {
            blocks.constant_equations.push_back(r);
        } else {
            blocks.equations[block_of_root[find(eq.vars[0])]].push_back(r);
        }
    }
    return blocks;
}

} // namespace

ParitySystem::ParitySystem(std::size_t num_vars, std::vector<ParityEquation> equations,
                           std::vector<HVVariable> var_names)
    : num_vars_(num_vars), equations_(std::move(equations)),
      var_names_(std::move(var_names)) {
    if (!var_names_.empty() && var_names_.size() != num_vars_) {
        throw StructuralError("variable name count does not match num_vars");
    }
    for (auto& eq : equations_) {
        std::sort(eq.vars.begin(), eq.vars.end());
        std::vector<std::size_t> reduced;
        for (std::size_t j = 0; j < eq.vars.size();) {
            std::size_t k = j;
            while (k < eq.vars.size() && eq.vars[k] == eq.vars[j]) {
                ++k;
            }
            if (eq.vars[j] >= num_vars_) {
                throw StructuralError("variable index " + std::to_string(eq.vars[j]) +
                                      " out of range");
            }
            if ((k - j) % 2 == 1) {
                reduced.push_back(eq.vars[j]);
            }
            j = k;
        }
        eq.vars = std::move(reduced);
    }
}

std::optional<std::size_t> ParitySystem::find_variable(std::size_t party, PauliAxis axis,
                                                       std::size_t context) const {
    const HVVariable wanted{party, axis, context};
    for (std::size_t v = 0; v < var_names_.size(); ++v) {
        if (var_names_[v] == wanted) {
            return v;
        }
    }
    return std::nullopt;
}

ParitySystem ParitySystem::restrict_to(std::span<const std::size_t> rows) const {
    std::vector<ParityEquation> eqs;
    eqs.reserve(rows.size());
    for (auto r : rows) {
        if (r >= equations_.size()) {
            throw StructuralError("equation index out of range");
        }
        eqs.push_back(equations_[r]);
    }
    return ParitySystem(num_vars_, std::move(eqs), var_names_);
}

bool witness_satisfies(const ParitySystem& system, std::span<const int> witness) {
    if (witness.size() != system.num_vars()) {
        return false;
    }
    if (std::any_of(witness.begin(), witness.end(),
                    [](int v) { return v != 1 && v != -1; })) {
        return false;
    }
    for (const auto& eq : system.equations()) {
        int product = 1;
        for (auto v : eq.vars) {
            product *= witness[v];
        }
        if (product != (eq.target ? -1 : 1)) {
            return false;
        }
    }
    return true;
}

bool is_contradiction(const ParitySystem& system, std::span<const std::size_t> equations) {
    if (equations.empty()) {
        return false;
    }
    std::vector<std::size_t> sorted(equations.begin(), equations.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        sorted.back() >= system.num_equations()) {
        return false;
    }
    std::vector<int> count(system.num_vars(), 0);
    bool target = false;
    for (auto r : sorted) {
        for (auto v : system[r].vars) {
            ++count[v];
        }
        target = target != system[r].target;
    }
    return target && std::all_of(count.begin(), count.end(),
                                 [](int c) { return c % 2 == 0; });
}

void check_verdict(const ParitySystem& system, const Verdict& verdict) {
    if (verdict.satisfiable) {
        if (!verdict.witness || verdict.certificate) {
            throw ConsistencyError("satisfiable verdict must carry only a witness");
        }
        if (!witness_satisfies(system, *verdict.witness)) {
            throw ConsistencyError("witness does not satisfy the system");
        }
    } else {
        if (verdict.witness) {
            throw ConsistencyError("unsatisfiable verdict carries a witness");
        }
        if (verdict.certificate && !is_contradiction(system, *verdict.certificate)) {
            throw ConsistencyError("certificate is not a contradiction");
        }
    }
}

Verdict solve_gf2(const ParitySystem& system) {
    auto result = eliminate(system);
    Verdict verdict;
    verdict.satisfiable = result.satisfiable;
    if (result.satisfiable) {
        verdict.witness = std::move(result.witness);
    } else {
        verdict.certificate = minimize_certificate(system, std::move(result.certificate));
    }
    check_verdict(system, verdict);
    return verdict;
}

std::size_t enumeration_size(const ParitySystem& system) {
    const auto blocks = partition_blocks(system);
    std::size_t total = 0;
    for (const auto& vars : blocks.vars) {
        if (vars.size() >= 63) {
            return static_cast<std::size_t>(-1);
        }
        total += std::size_t{1} << vars.size();
    }
    return total;
}

Verdict solve_bruteforce(const ParitySystem& system) {
    const auto blocks = partition_blocks(system);
    for (const auto& vars : blocks.vars) {
        if (vars.size() > kMaxEnumeratedVars) {
            throw CapabilityError("enumeration block has " + std::to_string(vars.size()) +
                                  " variables; limit is " +
                                  std::to_string(kMaxEnumeratedVars));
        }
    }

    Verdict unsat;
    unsat.satisfiable = false;
    for (auto r : blocks.constant_equations) {
        if (system[r].target) {
            return unsat;
        }
    }

    std::vector<int> witness(system.num_vars(), 1);
    for (std::size_t b = 0; b < blocks.vars.size(); ++b) {
        const auto& vars = blocks.vars[b];
        const std::size_t width = vars.size();
        // Local variable j sits at bit (width - 1 - j) of the counter, so
        // counting upward walks assignments in lexicographic order.
        std::vector<std::uint32_t> masks;
        std::vector<bool> targets;
        for (auto r : blocks.equations[b]) {
            std::uint32_t mask = 0;
            for (auto v : system[r].vars) {
                const auto j = static_cast<std::size_t>(
                    std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
                mask |= std::uint32_t{1} << (width - 1 - j);
            }
            masks.push_back(mask);
            targets.push_back(system[r].target);
        }

        const std::uint64_t limit = std::uint64_t{1} << width;
        std::optional<std::uint32_t> found;
        for (std::uint64_t x = 0; x < limit && !found; ++x) {
            const auto bits = static_cast<std::uint32_t>(x);
            bool ok = true;
            for (std::size_t e = 0; e < masks.size() && ok; ++e) {
                ok = ((std::popcount(bits & masks[e]) & 1) != 0) == targets[e];
            }
            if (ok) {
                found = bits;
            }
        }
        if (!found) {
            return unsat;
        }
        for (std::size_t j = 0; j < width; ++j) {
            if (((*found >> (width - 1 - j)) & 1U) != 0) {
                witness[vars[j]] = -1;
            }
        }
    }

    Verdict verdict;
    verdict.satisfiable = true;
    verdict.witness = std::move(witness);
    check_verdict(system, verdict);
    return verdict;
}

} // namespace mmes
