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

#include "mmes/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string>

#include "mmes/errors.hpp"

namespace mmes {

std::vector<std::string> default_party_names(std::size_t num_parties) {
    std::vector<std::string> names;
    names.reserve(num_parties);
    for (std::size_t k = 0; k < num_parties; ++k) {
        names.emplace_back(1, static_cast<char>('A' + k));
    }
    return names;
}

CorrelationTable::CorrelationTable(std::size_t num_parties,
                                   std::vector<CorrelationRow> rows,
                                   std::vector<std::string> party_names)
    : num_parties_(num_parties), rows_(std::move(rows)),
      party_names_(std::move(party_names)) {
    if (num_parties_ == 0 || num_parties_ > 16) {
        throw StructuralError("tables support 1 to 16 parties");
    }
    if (party_names_.empty()) {
        party_names_ = default_party_names(num_parties_);
    }
    if (party_names_.size() != num_parties_) {
        throw StructuralError("party name count does not match party count");
    }
    std::set<PauliString> seen;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.operators.size() != num_parties_) {
            throw StructuralError("row " + std::to_string(r) + " has " +
                                  std::to_string(row.operators.size()) +
                                  " parties, expected " + std::to_string(num_parties_));
        }
        if (row.expected_sign != 1 && row.expected_sign != -1) {
            throw StructuralError("row " + std::to_string(r) + " sign must be +1 or -1");
        }
        if (!seen.insert(row.operators).second) {
            throw StructuralError("duplicate row " + row.operators.to_string());
        }
    }
}

std::size_t CorrelationTable::party_index(std::string_view name) const {
    for (std::size_t k = 0; k < party_names_.size(); ++k) {
        if (party_names_[k] == name) {
            return k;
        }
    }
    throw StructuralError("unknown party '" + std::string(name) + "'");
}

CorrelationTable CorrelationTable::without_row(std::size_t index) const {
    if (index >= rows_.size()) {
        throw StructuralError("row index out of range");
    }
    auto rows = rows_;
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(index));
    return CorrelationTable(num_parties_, std::move(rows), party_names_);
}

StateVector build_mmes5() {
    // Signs of |00000> ... |11111>, four kets per line.
    static constexpr std::array<int, 32> kSigns = {
        +1, +1, +1, +1, //
        +1, -1, -1, +1, //
        +1, -1, -1, +1, //
        +1, +1, +1, +1, //
        +1, +1, -1, -1, //
        +1, -1, +1, -1, //
        -1, +1, -1, +1, //
        -1, -1, +1, +1, //
    };
    std::vector<Complex> amps(kSigns.begin(), kSigns.end());
    return StateVector::make(5, amps);
}

CorrelationTable canonical_table() {
    static constexpr std::pair<const char*, int> kRows[] = {
        {"ZXXII", +1}, {"XZIZI", +1}, {"YYIIZ", +1}, {"YIZYI", +1},
        {"XIYIY", +1}, {"ZIIXX", +1}, {"IYYXI", -1}, {"IZZIX", +1},
        {"IXIYY", -1}, {"IIXZZ", +1}, {"XXZXZ", -1}, {"XYXYX", -1},
        {"YXYZX", +1}, {"YZXXY", +1}, {"ZYZZY", +1}, {"ZZYYZ", +1},
    };
    std::vector<CorrelationRow> rows;
    for (const auto& [ops, sign] : kRows) {
        rows.push_back({PauliString::parse(ops), sign});
    }
    return CorrelationTable(5, std::move(rows));
}

TableVerification verify_table(const StateVector& state,
                               const CorrelationTable& table, double tolerance) {
    if (state.num_qubits() != table.num_parties()) {
        throw StructuralError("state has " + std::to_string(state.num_qubits()) +
                              " qubits but table has " +
                              std::to_string(table.num_parties()) + " parties");
    }
    TableVerification out;
    for (std::size_t r = 0; r < table.size(); ++r) {
        const auto& row = table[r];
        RowCheck check;
        check.row = r;
        check.operators = row.operators;
        check.expected_sign = row.expected_sign;
        check.computed = expectation(state, row.operators);
        check.pass = std::abs(check.computed - row.expected_sign) <= tolerance;
        out.pass = out.pass && check.pass;
        out.rows.push_back(std::move(check));
    }
    return out;
}

bool rows_compatible(const CorrelationRow& a, const CorrelationRow& b) {
    if (a.operators.size() != b.operators.size()) {
        throw StructuralError("rows have different party counts");
    }
    for (std::size_t k = 0; k < a.operators.size(); ++k) {
        const auto x = a.operators[k];
        const auto y = b.operators[k];
        if (x != PauliAxis::I && y != PauliAxis::I && x != y) {
            return false;
        }
    }
    return true;
}

bool rows_jointly_testable(const CorrelationRow& a, const CorrelationRow& b,
                           CompatibilityRule rule, std::size_t isolated_party) {
    if (!rows_compatible(a, b)) {
        return false;
    }
    if (rule == CompatibilityRule::SharedSettings || a == b) {
        return true;
    }
    if (isolated_party >= a.operators.size()) {
        throw StructuralError("isolated party out of range");
    }
    for (std::size_t k = 0; k < a.operators.size(); ++k) {
        if (k != isolated_party && a.operators[k] != PauliAxis::I &&
            b.operators[k] != PauliAxis::I) {
            return false;
        }
    }
    return true;
}

namespace {

// Depth-first search over restricted growth strings: row r goes into one of
// the open groups (lowest label first) or opens a new one. The first complete
// assignment found under a group budget is the lexicographically smallest
// label sequence with that budget.
class CoverSearch {
  public:
    CoverSearch(const CorrelationTable& table, CompatibilityRule rule,
                std::size_t isolated)
        : n_(table.size()) {
        compatible_.assign(n_ * n_, false);
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                compatible_[i * n_ + j] =
                    rows_jointly_testable(table[i], table[j], rule, isolated);
            }
        }
    }

    std::vector<std::size_t> solve() {
        for (std::size_t budget = 1; budget <= n_; ++budget) {
            budget_ = budget;
            labels_.assign(n_, 0);
            groups_.clear();
            if (place(0)) {
                return labels_;
            }
        }
        return {};
    }

  private:
    bool place(std::size_t row) {
        if (row == n_) {
            return true;
        }
        for (std::size_t g = 0; g < groups_.size(); ++g) {
            if (fits(row, groups_[g])) {
                groups_[g].push_back(row);
                labels_[row] = g;
                if (place(row + 1)) {
                    return true;
                }
                groups_[g].pop_back();
            }
        }
        if (groups_.size() < budget_) {
            groups_.push_back({row});
            labels_[row] = groups_.size() - 1;
            if (place(row + 1)) {
                return true;
            }
            groups_.pop_back();
        }
        return false;
    }

    bool fits(std::size_t row, const std::vector<std::size_t>& group) const {
        return std::all_of(group.begin(), group.end(), [&](std::size_t member) {
            return compatible_[row * n_ + member];
        });
    }

    std::size_t n_;
    std::size_t budget_ = 0;
    std::vector<bool> compatible_;
    std::vector<std::size_t> labels_;
    std::vector<std::vector<std::size_t>> groups_;
};

} // namespace

std::vector<CompatibilityGroup> minimum_context_cover(const CorrelationTable& table,
                                                      const CoverOptions& options) {
    if (table.empty()) {
        return {};
    }
    const std::size_t isolated = options.isolated_party.value_or(table.num_parties() - 1);
    if (isolated >= table.num_parties()) {
        throw StructuralError("isolated party out of range");
    }
    const auto labels = CoverSearch(table, options.rule, isolated).solve();
    const std::size_t num_groups = *std::max_element(labels.begin(), labels.end()) + 1;
    std::vector<CompatibilityGroup> groups(num_groups);
    std::vector<std::vector<PauliAxis>> contexts(
        num_groups, std::vector<PauliAxis>(table.num_parties(), PauliAxis::I));
    for (std::size_t r = 0; r < labels.size(); ++r) {
        groups[labels[r]].row_indices.push_back(r);
        for (std::size_t k = 0; k < table.num_parties(); ++k) {
            if (table[r].operators[k] != PauliAxis::I) {
                contexts[labels[r]][k] = table[r].operators[k];
            }
        }
    }
    for (std::size_t g = 0; g < num_groups; ++g) {
        groups[g].joint_context = PauliString(std::move(contexts[g]));
    }
    return groups;
}

PurityReport mmes_purity_report(const StateVector& state) {
    if (state.num_qubits() != 5) {
        throw StructuralError("purity report expects a 5-qubit state");
    }
    PurityReport report;
    auto measure = [&](std::vector<std::size_t> qubits) {
        SubsystemPurity s;
        s.purity = subsystem_purity(state, qubits);
        s.target = std::ldexp(1.0, -static_cast<int>(qubits.size()));
        s.pass = std::abs(s.purity - s.target) <= kPurityTolerance;
        s.qubits = std::move(qubits);
        return s;
    };
    for (std::size_t a = 0; a < 5; ++a) {
        report.single.push_back(measure({a}));
    }
    for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = a + 1; b < 5; ++b) {
            report.pairs.push_back(measure({a, b}));
        }
    }
    auto passed = [](const SubsystemPurity& s) { return s.pass; };
    report.perfect = std::all_of(report.single.begin(), report.single.end(), passed) &&
                     std::all_of(report.pairs.begin(), report.pairs.end(), passed);
    return report;
}

} // namespace mmes
