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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mmes/correlations.hpp"
#include "mmes/errors.hpp"
#include "mmes/experiment.hpp"
#include "mmes/hv_model.hpp"
#include "mmes/table_io.hpp"

#ifndef MMES_VERSION
#define MMES_VERSION "0.0.0"
#endif

namespace mmescheck {
namespace {

using mmes::CorrelationTable;
using mmes::LocalityModel;
using mmes::ParitySystem;
using mmes::PauliString;
using mmes::SolvedSystem;

constexpr double kStateTolerance = 1e-12;

CorrelationTable load(const CommandOptions& options) {
    return options.table_path ? mmes::load_table(*options.table_path)
                              : mmes::canonical_table();
}

Json table_source(const CommandOptions& options) {
    return options.table_path ? Json(*options.table_path) : Json("canonical");
}

mmes::StateVector select_state(const std::string& name) {
    if (name == "mmes") {
        return mmes::build_mmes5();
    }
    if (name == "product") {
        return mmes::StateVector::basis(5, 0);
    }
    throw mmes::StructuralError("unknown state '" + name + "' (expected mmes or product)");
}

// Equation label of the canonical row carrying these operators, if any.
std::optional<std::size_t> canonical_equation(const PauliString& ops) {
    static const auto canonical = mmes::canonical_table();
    if (ops.size() != canonical.num_parties()) {
        return std::nullopt;
    }
    for (std::size_t r = 0; r < canonical.size(); ++r) {
        if (canonical[r].operators == ops) {
            return mmes::equation_label(r);
        }
    }
    return std::nullopt;
}

Json row_ref(const CorrelationTable& table, std::size_t r) {
    Json j;
    j["row"] = r;
    if (auto eq = canonical_equation(table[r].operators)) {
        j["equation"] = *eq;
    }
    j["operators"] = table[r].operators.to_string();
    return j;
}

std::string equation_text(const ParitySystem& system, std::size_t e,
                          const std::vector<std::string>& party_names) {
    const auto& eq = system[e];
    std::string lhs;
    for (auto v : eq.vars) {
        if (!lhs.empty()) {
            lhs += "·";
        }
        lhs += system.var_names().empty()
                   ? "v" + std::to_string(v)
                   : mmes::variable_name(system.var_names()[v], party_names);
    }
    if (lhs.empty()) {
        lhs = "1";
    }
    return lhs + " = " + (eq.target ? "-1" : "+1");
}

Json assignment_json(const mmes::OutcomeAssignment& a, std::size_t party,
                     const std::vector<std::string>& party_names) {
    Json j = Json::object();
    for (const auto& [axis, value] : a) {
        j[mmes::variable_name({party, axis, 0}, party_names)] = value;
    }
    return j;
}

Json solved_json(const CorrelationTable& table, const SolvedSystem& solved) {
    const auto& names = table.party_names();
    Json j;
    j["num_vars"] = solved.system.num_vars();
    j["num_equations"] = solved.system.num_equations();
    j["satisfiable"] = solved.satisfiable();
    j["gf2_satisfiable"] = solved.gf2.satisfiable;
    j["bruteforce_satisfiable"] = solved.bruteforce.satisfiable;
    j["bruteforce_assignments"] = mmes::enumeration_size(solved.system);
    if (solved.gf2.witness) {
        Json w = Json::object();
        for (std::size_t v = 0; v < solved.system.num_vars(); ++v) {
            w[mmes::variable_name(solved.system.var_names()[v], names)] =
                (*solved.gf2.witness)[v];
        }
        j["witness"] = std::move(w);
    }
    if (solved.gf2.certificate) {
        Json cert = Json::array();
        for (auto e : *solved.gf2.certificate) {
            Json c = row_ref(table, e);
            c["relation"] = equation_text(solved.system, e, names);
            cert.push_back(std::move(c));
        }
        j["certificate"] = std::move(cert);
        j["certificate_verified"] =
            mmes::is_contradiction(solved.system, *solved.gf2.certificate);
    }
    return j;
}

Json scan_json(const CorrelationTable& table, const mmes::ScanReport& scan) {
    const auto& names = table.party_names();
    Json j;
    j["isolated"] = names[scan.isolated_party];
    Json axes = Json::array();
    for (auto a : scan.axes) {
        axes.push_back(std::string(1, mmes::to_lower_char(a)));
    }
    j["axes"] = std::move(axes);
    Json per = Json::array();
    for (const auto& solved : scan.results) {
        Json entry;
        entry["assignment"] = assignment_json(*solved.assignment, scan.isolated_party, names);
        entry["verdict"] = solved.satisfiable() ? "SAT" : "UNSAT";
        entry["system"] = solved_json(table, solved);
        per.push_back(std::move(entry));
    }
    j["assignments"] = std::move(per);
    j["unsat"] = scan.unsatisfiable_count();
    j["total"] = scan.results.size();
    j["no_go_holds"] = scan.no_go_holds;
    return j;
}

Json groups_json(const CorrelationTable& table,
                 const std::vector<mmes::CompatibilityGroup>& groups) {
    Json out = Json::array();
    for (const auto& g : groups) {
        Json j;
        j["rows"] = g.row_indices;
        Json eqs = Json::array();
        for (auto r : g.row_indices) {
            if (auto eq = canonical_equation(table[r].operators)) {
                eqs.push_back(*eq);
            }
        }
        if (eqs.size() == g.row_indices.size()) {
            j["equations"] = std::move(eqs);
        }
        Json ops = Json::array();
        for (auto r : g.row_indices) {
            ops.push_back(table[r].operators.to_string());
        }
        j["operators"] = std::move(ops);
        j["context"] = g.joint_context.to_string();
        out.push_back(std::move(j));
    }
    return out;
}

ReportEnvelope envelope(const std::string& command) {
    ReportEnvelope env;
    env.command = command;
    env.version = version();
    return env;
}

void finish(ReportEnvelope& env, bool pass) {
    env.pass = pass;
    env.exit_code = pass ? kExitPass : kExitCheckFailed;
}

std::size_t party_from_label(const CorrelationTable& table, const std::string& label) {
    return table.party_index(label);
}

} // namespace

std::string version() { return MMES_VERSION; }

Json ReportEnvelope::to_json() const {
    Json j;
    j["command"] = command;
    j["version"] = version;
    j["inputs"] = inputs;
    j["pass"] = pass;
    j["exit_code"] = exit_code;
    j["warnings"] = warnings;
    j["results"] = results;
    return j;
}

ReportEnvelope cmd_verify_state(const CommandOptions& options) {
    auto env = envelope("verify-state");
    env.inputs["state"] = "mmes";
    auto state = mmes::build_mmes5();
    if (options.perturb_amplitude) {
        env.inputs["perturb_amplitude"] = *options.perturb_amplitude;
        std::vector<mmes::Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
        if (*options.perturb_amplitude >= amps.size()) {
            throw mmes::StructuralError("perturbed amplitude index out of range");
        }
        amps[*options.perturb_amplitude] *= 2.0;
        state = mmes::StateVector::make(5, amps);
    }

    const double norm2 = state.norm_squared();
    const double expected_modulus = 1.0 / std::sqrt(32.0);
    double max_dev = 0.0;
    for (const auto& a : state.amplitudes()) {
        max_dev = std::max(max_dev, std::abs(std::abs(a) - expected_modulus));
    }
    const auto purity = mmes::mmes_purity_report(state);
    const auto names = mmes::default_party_names(5);

    auto purity_json = [&](const std::vector<mmes::SubsystemPurity>& list) {
        Json arr = Json::array();
        for (const auto& s : list) {
            Json j;
            std::string label;
            for (auto q : s.qubits) {
                label += names[q];
            }
            j["parties"] = label;
            j["purity"] = s.purity;
            j["target"] = s.target;
            j["pass"] = s.pass;
            arr.push_back(std::move(j));
        }
        return arr;
    };

    const bool norm_ok = std::abs(norm2 - 1.0) <= kStateTolerance;
    const bool modulus_ok = max_dev <= kStateTolerance;
    env.results["num_qubits"] = state.num_qubits();
    env.results["norm_squared"] = norm2;
    env.results["norm_ok"] = norm_ok;
    env.results["max_modulus_deviation"] = max_dev;
    env.results["amplitude_modulus_ok"] = modulus_ok;
    env.results["single_party_purities"] = purity_json(purity.single);
    env.results["two_party_purities"] = purity_json(purity.pairs);
    env.results["perfect_mmes"] = purity.perfect;
    finish(env, norm_ok && modulus_ok && purity.perfect);
    return env;
}

ReportEnvelope cmd_verify_correlations(const CommandOptions& options) {
    auto env = envelope("verify-correlations");
    env.inputs["table"] = table_source(options);
    env.inputs["tolerance"] = options.tolerance;
    env.inputs["state"] = options.state;
    const auto table = load(options);
    const auto state = select_state(options.state);
    const auto check = mmes::verify_table(state, table, options.tolerance);

    Json rows = Json::array();
    std::size_t passed = 0;
    for (const auto& rc : check.rows) {
        Json j = row_ref(table, rc.row);
        j["expected"] = rc.expected_sign;
        j["computed"] = rc.computed;
        j["pass"] = rc.pass;
        passed += rc.pass ? 1 : 0;
        rows.push_back(std::move(j));
    }
    if (table.empty()) {
        env.warnings.push_back("table has no rows; verification passes vacuously");
    }
    env.results["rows"] = std::move(rows);
    env.results["passed"] = passed;
    env.results["total"] = check.rows.size();
    finish(env, check.pass);
    return env;
}

ReportEnvelope cmd_nogo(const CommandOptions& options) {
    auto env = envelope("nogo");
    env.inputs["table"] = table_source(options);
    env.inputs["model"] = options.model;
    const auto table = load(options);

    if (options.model == "block") {
        if (!options.isolated) {
            throw mmes::StructuralError("--isolated is required for --model block");
        }
        env.inputs["isolated"] = *options.isolated;
        const auto scan = mmes::scan_block_nonlocal(
            table, party_from_label(table, *options.isolated), options.workers > 1);
        env.results = scan_json(table, scan);
        env.results["interpretation"] =
            scan.no_go_holds ? "no-go holds" : "some assignment admits a solution";
        finish(env, scan.no_go_holds);
        return env;
    }

    if (options.isolated) {
        throw mmes::StructuralError("--isolated only applies to --model block");
    }
    LocalityModel model;
    if (options.model == "local") {
        model = LocalityModel::local();
    } else if (options.model == "full") {
        model = LocalityModel::fully_nonlocal();
    } else {
        throw mmes::StructuralError("--model must be local, block or full");
    }
    const auto solved = mmes::check_model(table, model);
    if (solved.gf2.witness && !mmes::witness_reproduces_table(table, model, solved)) {
        throw mmes::ConsistencyError("witness does not reproduce the table");
    }
    env.results["model"] = model.name();
    env.results["verdict"] = solved.satisfiable() ? "SAT" : "UNSAT";
    env.results["system"] = solved_json(table, solved);
    if (model.kind == LocalityModel::Kind::FullyNonlocal) {
        env.results["interpretation"] = solved.satisfiable()
                                            ? "model indistinguishable"
                                            : "model cannot reproduce the table";
        finish(env, solved.satisfiable());
    } else {
        env.results["interpretation"] =
            solved.satisfiable() ? "local model reproduces the table" : "no-go holds";
        finish(env, !solved.satisfiable());
    }
    return env;
}

ReportEnvelope cmd_scan_all(const CommandOptions& options) {
    auto env = envelope("scan-all");
    env.inputs["table"] = table_source(options);
    const auto table = load(options);
    Json scans = Json::array();
    std::size_t systems = 0;
    std::size_t unsat = 0;
    for (std::size_t p = 0; p < table.num_parties(); ++p) {
        const auto scan = mmes::scan_block_nonlocal(table, p, options.workers > 1);
        systems += scan.results.size();
        unsat += scan.unsatisfiable_count();
        scans.push_back(scan_json(table, scan));
    }
    env.results["scans"] = std::move(scans);
    env.results["systems"] = systems;
    env.results["unsat"] = unsat;
    if (table.empty()) {
        env.warnings.push_back("table has no rows");
    }
    finish(env, systems > 0 && unsat == systems);
    return env;
}

ReportEnvelope cmd_compat(const CommandOptions& options) {
    auto env = envelope("compat");
    env.inputs["table"] = table_source(options);
    const auto table = load(options);
    const std::size_t isolated = options.isolated
                                     ? party_from_label(table, *options.isolated)
                                     : table.num_parties() - 1;
    env.inputs["isolated"] = table.party_names()[isolated];

    mmes::CoverOptions block;
    block.rule = mmes::CompatibilityRule::DisjointBlock;
    block.isolated_party = isolated;
    const auto groups = mmes::minimum_context_cover(table, block);
    mmes::CoverOptions shared;
    shared.rule = mmes::CompatibilityRule::SharedSettings;
    const auto shared_groups = mmes::minimum_context_cover(table, shared);

    env.results["rule"] = "disjoint-block";
    env.results["num_groups"] = groups.size();
    env.results["groups"] = groups_json(table, groups);
    Json alt;
    alt["rule"] = "shared-settings";
    alt["num_groups"] = shared_groups.size();
    alt["groups"] = groups_json(table, shared_groups);
    env.results["shared_settings"] = std::move(alt);
    finish(env, true);
    return env;
}

ReportEnvelope cmd_simulate(const CommandOptions& options) {
    auto env = envelope("simulate");
    env.inputs["table"] = table_source(options);
    env.inputs["runs"] = options.runs;
    env.inputs["seed"] = options.seed;
    env.inputs["state"] = options.state;
    if (options.runs == 0) {
        throw mmes::StructuralError("--runs must be at least 1");
    }
    const auto table = load(options);
    const auto state = select_state(options.state);
    const auto report =
        mmes::run_protocol(state, table, options.runs, options.seed, options.workers);
    const auto rates = mmes::expected_match_rates(table);

    Json rows = Json::array();
    std::optional<std::uint64_t> rarest;
    for (const auto& s : report.rows) {
        Json j = row_ref(table, s.row);
        j["expected"] = s.expected_sign;
        j["samples"] = s.samples;
        j["plus"] = s.plus;
        j["minus"] = s.minus;
        j["agreement_rate"] = s.agreement_rate ? Json(*s.agreement_rate) : Json(nullptr);
        j["expected_match_rate"] = rates[s.row];
        j["pass"] = s.pass;
        rarest = std::min(rarest.value_or(s.samples), s.samples);
        rows.push_back(std::move(j));
    }
    Json marginals = Json::array();
    for (const auto& m : report.marginals) {
        Json j;
        j["party"] = table.party_names()[m.party];
        j["axis"] = std::string(1, mmes::to_lower_char(m.axis));
        j["trials"] = m.trials;
        j["plus"] = m.plus;
        marginals.push_back(std::move(j));
    }
    env.results["total_runs"] = report.total_runs;
    env.results["runs_with_match"] = report.runs_with_match;
    env.results["rarest_row_samples"] = rarest ? Json(*rarest) : Json(nullptr);
    env.results["rows"] = std::move(rows);
    env.results["marginals"] = std::move(marginals);
    if (table.empty()) {
        env.warnings.push_back("table has no rows; nothing to post-select");
    }
    finish(env, report.pass);
    return env;
}

ReportEnvelope run_command(const std::string& name, const CommandOptions& options) {
    auto failure = [&](int code, const std::string& message, std::optional<std::size_t> line) {
        auto env = envelope(name);
        env.pass = false;
        env.exit_code = code;
        env.results["error"] = message;
        if (line) {
            env.results["line"] = *line;
        }
        return env;
    };
    try {
        if (name == "verify-state") {
            return cmd_verify_state(options);
        }
        if (name == "verify-correlations") {
            return cmd_verify_correlations(options);
        }
        if (name == "nogo") {
            return cmd_nogo(options);
        }
        if (name == "scan-all") {
            return cmd_scan_all(options);
        }
        if (name == "compat") {
            return cmd_compat(options);
        }
        if (name == "simulate") {
            return cmd_simulate(options);
        }
        return failure(kExitInputError, "unknown command '" + name + "'", std::nullopt);
    } catch (const mmes::TableParseError& e) {
        return failure(kExitInputError, e.what(), e.line());
    } catch (const mmes::ConsistencyError& e) {
        return failure(kExitInternalError, e.what(), std::nullopt);
    } catch (const std::logic_error& e) {
        // StructuralError, DegenerateInputError and CapabilityError derive
        // from logic_error subclasses; all are input problems.
        return failure(kExitInputError, e.what(), std::nullopt);
    } catch (const std::runtime_error& e) {
        return failure(kExitInputError, e.what(), std::nullopt);
    }
}

} // namespace mmescheck
