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

#include "mmes/hv_model.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "mmes/errors.hpp"

namespace mmes {
namespace {

std::size_t context_for(const LocalityModel& model, std::size_t row) {
    return model.kind == LocalityModel::Kind::FullyNonlocal ? row + 1 : 0;
}

bool is_isolated(const LocalityModel& model, std::size_t party) {
    return model.kind == LocalityModel::Kind::BlockNonlocal &&
           party == model.isolated_party;
}

std::string signed_value(int v) { return v > 0 ? "+1" : "-1"; }

} // namespace

std::string LocalityModel::name() const {
    switch (kind) {
    case Kind::Local:
        return "local";
    case Kind::BlockNonlocal:
        return "block";
    case Kind::FullyNonlocal:
        return "full";
    }
    return "unknown";
}

std::string variable_name(const HVVariable& var,
                          const std::vector<std::string>& party_names) {
    std::string name(1, to_lower_char(var.axis));
    name += '_';
    name += var.party < party_names.size() ? party_names[var.party]
                                           : std::to_string(var.party);
    if (var.context != 0) {
        name += "[r" + std::to_string(var.context - 1) + "]";
    }
    return name;
}

std::vector<PauliAxis> party_axes(const CorrelationTable& table, std::size_t party) {
    if (party >= table.num_parties()) {
        throw StructuralError("party index " + std::to_string(party) + " out of range");
    }
    std::vector<PauliAxis> axes;
    for (auto axis : kMeasurableAxes) {
        const bool present =
            std::any_of(table.rows().begin(), table.rows().end(),
                        [&](const CorrelationRow& r) { return r.operators[party] == axis; });
        if (present) {
            axes.push_back(axis);
        }
    }
    return axes;
}

std::vector<OutcomeAssignment> enumerate_assignments(const std::vector<PauliAxis>& axes) {
    const std::size_t k = axes.size();
    std::vector<OutcomeAssignment> out;
    out.reserve(std::size_t{1} << k);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        OutcomeAssignment a;
        for (std::size_t j = 0; j < k; ++j) {
            a[axes[j]] = ((mask >> (k - 1 - j)) & 1U) != 0 ? -1 : 1;
        }
        out.push_back(std::move(a));
    }
    return out;
}

ParitySystem compile(const CorrelationTable& table, const LocalityModel& model,
                     const std::optional<OutcomeAssignment>& assignment) {
    const bool block = model.kind == LocalityModel::Kind::BlockNonlocal;
    if (block) {
        if (model.isolated_party >= table.num_parties()) {
            throw StructuralError("isolated party out of range");
        }
        if (!assignment) {
            throw StructuralError("block-nonlocal model requires an outcome assignment");
        }
        const auto axes = party_axes(table, model.isolated_party);
        if (assignment->size() != axes.size()) {
            throw StructuralError("assignment must cover exactly the isolated party's axes");
        }
        for (auto axis : axes) {
            auto it = assignment->find(axis);
            if (it == assignment->end()) {
                throw StructuralError(std::string("assignment lacks axis ") + to_char(axis));
            }
            if (it->second != 1 && it->second != -1) {
                throw StructuralError("assignment values must be +1 or -1");
            }
        }
    } else if (assignment) {
        throw StructuralError("outcome assignment only applies to the block-nonlocal model");
    }

    std::vector<HVVariable> vars;
    if (model.kind == LocalityModel::Kind::FullyNonlocal) {
        for (std::size_t p = 0; p < table.num_parties(); ++p) {
            for (auto axis : kMeasurableAxes) {
                for (std::size_t r = 0; r < table.size(); ++r) {
                    if (table[r].operators[p] == axis) {
                        vars.push_back({p, axis, context_for(model, r)});
                    }
                }
            }
        }
    } else {
        for (std::size_t p = 0; p < table.num_parties(); ++p) {
            if (is_isolated(model, p)) {
                continue;
            }
            for (auto axis : party_axes(table, p)) {
                vars.push_back({p, axis, 0});
            }
        }
    }

    auto index_of = [&](const HVVariable& v) {
        return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) -
                                        vars.begin());
    };

    std::vector<ParityEquation> equations;
    equations.reserve(table.size());
    for (std::size_t r = 0; r < table.size(); ++r) {
        const auto& row = table[r];
        int sign = row.expected_sign;
        ParityEquation eq;
        for (std::size_t p = 0; p < table.num_parties(); ++p) {
            const auto axis = row.operators[p];
            if (axis == PauliAxis::I) {
                continue;
            }
            if (is_isolated(model, p)) {
                sign *= assignment->at(axis);
            } else {
                eq.vars.push_back(index_of({p, axis, context_for(model, r)}));
            }
        }
        eq.target = sign < 0;
        equations.push_back(std::move(eq));
    }
    const std::size_t num_vars = vars.size();
    return ParitySystem(num_vars, std::move(equations), std::move(vars));
}

SolvedSystem solve_both(ParitySystem system, std::optional<OutcomeAssignment> assignment) {
    SolvedSystem out;
    out.assignment = std::move(assignment);
    out.gf2 = solve_gf2(system);
    out.bruteforce = solve_bruteforce(system);
    check_verdict(system, out.gf2);
    check_verdict(system, out.bruteforce);
    if (out.gf2.satisfiable != out.bruteforce.satisfiable) {
        throw ConsistencyError("GF(2) elimination and enumeration disagree on satisfiability");
    }
    out.system = std::move(system);
    return out;
}

SolvedSystem check_model(const CorrelationTable& table, const LocalityModel& model) {
    if (model.kind == LocalityModel::Kind::BlockNonlocal) {
        throw StructuralError("use scan_block_nonlocal for the block-nonlocal model");
    }
    return solve_both(compile(table, model));
}

std::size_t ScanReport::unsatisfiable_count() const {
    return static_cast<std::size_t>(std::count_if(
        results.begin(), results.end(), [](const SolvedSystem& s) { return !s.satisfiable(); }));
}

ScanReport scan_block_nonlocal(const CorrelationTable& table, std::size_t isolated_party,
                               bool parallel) {
    ScanReport report;
    report.isolated_party = isolated_party;
    report.axes = party_axes(table, isolated_party);
    const auto model = LocalityModel::block_nonlocal(isolated_party);
    const auto assignments = enumerate_assignments(report.axes);

    auto solve_one = [&table, &model](const OutcomeAssignment& a) {
        return solve_both(compile(table, model, a), a);
    };
    if (parallel && assignments.size() > 1) {
        std::vector<std::future<SolvedSystem>> pending;
        pending.reserve(assignments.size());
        for (const auto& a : assignments) {
            pending.push_back(std::async(std::launch::async, solve_one, std::cref(a)));
        }
        for (auto& f : pending) {
            report.results.push_back(f.get());
        }
    } else {
        for (const auto& a : assignments) {
            report.results.push_back(solve_one(a));
        }
    }
    report.no_go_holds = report.unsatisfiable_count() == report.results.size();
    return report;
}

VariableValues row_values(const CorrelationTable& table, const LocalityModel& model,
                          const SolvedSystem& solved, std::size_t row) {
    if (row >= table.size()) {
        throw StructuralError("row index out of range");
    }
    if (!solved.gf2.witness) {
        throw StructuralError("system has no witness");
    }
    const auto& witness = *solved.gf2.witness;
    VariableValues values;
    for (std::size_t p = 0; p < table.num_parties(); ++p) {
        const auto axis = table[row].operators[p];
        if (axis == PauliAxis::I) {
            continue;
        }
        if (is_isolated(model, p)) {
            values[{p, axis}] = solved.assignment.value().at(axis);
            continue;
        }
        const auto v = solved.system.find_variable(p, axis, context_for(model, row));
        if (!v) {
            throw StructuralError("system does not contain the row's variables");
        }
        values[{p, axis}] = witness[*v];
    }
    return values;
}

bool witness_reproduces_table(const CorrelationTable& table, const LocalityModel& model,
                              const SolvedSystem& solved) {
    if (!solved.gf2.witness) {
        return false;
    }
    for (std::size_t r = 0; r < table.size(); ++r) {
        const auto values = row_values(table, model, solved, r);
        int product = 1;
        for (const auto& [key, v] : values) {
            product *= v;
        }
        if (product != table[r].expected_sign) {
            return false;
        }
    }
    return true;
}

Explanation nonlocal_explanation(const CorrelationTable& table, std::size_t row,
                                 const VariableValues& values) {
    if (row >= table.size()) {
        throw StructuralError("row index out of range");
    }
    const auto& ops = table[row].operators;
    std::vector<std::pair<std::size_t, PauliAxis>> factors;
    for (std::size_t p = 0; p < ops.size(); ++p) {
        if (ops[p] != PauliAxis::I) {
            factors.emplace_back(p, ops[p]);
        }
    }
    if (factors.size() < 2) {
        throw StructuralError("row " + ops.to_string() +
                              " has fewer than two factors; nothing to explain");
    }

    Explanation ex;
    ex.row = row;
    ex.party = factors.front().first;
    ex.axis = factors.front().second;
    ex.sign = table[row].expected_sign;
    ex.others.assign(factors.begin() + 1, factors.end());

    auto name = [&](std::size_t party, PauliAxis axis) {
        return variable_name({party, axis, 0}, table.party_names());
    };

    int product = 1;
    std::string joined;
    for (const auto& [party, axis] : ex.others) {
        auto it = values.find({party, axis});
        if (it == values.end()) {
            throw StructuralError("no value for " + name(party, axis));
        }
        product *= it->second;
        if (!joined.empty()) {
            joined += "·";
        }
        joined += name(party, axis);
    }
    ex.value = ex.sign * product;
    if (auto it = values.find({ex.party, ex.axis});
        it != values.end() && it->second != ex.value) {
        throw StructuralError("values do not satisfy row " + ops.to_string());
    }

    const char sign_char = ex.sign > 0 ? '+' : '-';
    ex.text = name(ex.party, ex.axis) + " = " + sign_char;
    ex.text += ex.others.size() == 1 ? joined : "(" + joined + ")";
    ex.text += " = " + signed_value(ex.value);
    return ex;
}

} // namespace mmes
