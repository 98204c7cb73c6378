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

// Acceptance gate: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "commands.hpp"
#include "mmes/correlations.hpp"
#include "mmes/experiment.hpp"
#include "mmes/hv_model.hpp"
#include "mmes/parity.hpp"
#include "oracles.hpp"

namespace {

using mmes::PauliAxis;

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double limit_ms, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms < limit_ms;
    const bool pass = out.ok && in_time;
    if (!pass) {
        ++failures;
    }
    std::printf("[%s] criterion %d: %s (%s; %.3f ms, limit %.0f ms%s)\n", pass ? "PASS" : "FAIL",
                id, title, out.detail.c_str(), ms, limit_ms, in_time ? "" : ", too slow");
    std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

Outcome state_verification() {
    const auto psi = mmes::build_mmes5();
    const double norm_dev = std::abs(psi.norm_squared() - 1.0);
    const double target = 1.0 / std::sqrt(32.0);
    double max_dev = 0.0;
    for (const auto& a : psi.amplitudes()) {
        max_dev = std::max(max_dev, std::abs(std::abs(a) - target));
    }
    return {psi.dimension() == 32 && norm_dev <= 1e-12 && max_dev <= 1e-12,
            fmt("|norm-1| = %.2e, max modulus deviation %.2e", norm_dev, max_dev)};
}

Outcome correlation_reproduction() {
    const auto psi = mmes::build_mmes5();
    const auto table = mmes::canonical_table();
    double worst = 0.0;
    for (const auto& row : table.rows()) {
        const double k = mmes::expectation(psi, row.operators);
        const double d = mmes::dense::expectation(psi, row.operators);
        worst = std::max({worst, std::abs(k - row.expected_sign), std::abs(d - row.expected_sign)});
    }
    const bool ok = table.size() == 16 && worst <= 1e-9 &&
                    mmes::verify_table(psi, table, 1e-9).pass;
    return {ok, fmt("16 rows, kernel and dense, max deviation %.2e", worst)};
}

Outcome mmes_property() {
    const auto psi = mmes::build_mmes5();
    const auto report = mmes::mmes_purity_report(psi);
    double worst = 0.0;
    bool ok = report.single.size() == 5 && report.pairs.size() == 10 && report.perfect;
    for (const auto* group : {&report.single, &report.pairs}) {
        for (const auto& s : *group) {
            const double dense = mmes::dense::subsystem_purity(psi, s.qubits);
            worst = std::max({worst, std::abs(s.purity - s.target), std::abs(dense - s.target)});
        }
    }
    ok = ok && worst <= 1e-9;
    return {ok, fmt("5 single + 10 pair purities, max deviation %.2e", worst)};
}

bool verdict_verified(const mmes::SolvedSystem& s) {
    mmes::check_verdict(s.system, s.gf2);
    mmes::check_verdict(s.system, s.bruteforce);
    if (s.gf2.satisfiable != s.bruteforce.satisfiable) {
        return false;
    }
    if (s.gf2.satisfiable) {
        return s.gf2.witness && mmes::witness_satisfies(s.system, *s.gf2.witness);
    }
    return s.gf2.certificate && mmes::is_contradiction(s.system, *s.gf2.certificate);
}

Outcome local_nogo() {
    const auto solved = mmes::check_model(mmes::canonical_table(), mmes::LocalityModel::local());
    const auto vars = solved.system.num_vars();
    const bool ok = vars == 15 && mmes::enumeration_size(solved.system) == 32768 &&
                    !solved.gf2.satisfiable && !solved.bruteforce.satisfiable &&
                    verdict_verified(solved);
    return {ok, fmt("%.0f variables UNSAT, certificate of %.0f equations", double(vars),
                    solved.gf2.certificate ? double(solved.gf2.certificate->size()) : 0.0)};
}

bool scan_ok(const mmes::ScanReport& scan) {
    if (scan.results.size() != 8 || !scan.no_go_holds) {
        return false;
    }
    for (const auto& r : scan.results) {
        if (r.gf2.satisfiable || !verdict_verified(r)) {
            return false;
        }
    }
    return true;
}

Outcome central_theorem() {
    const auto scan = mmes::scan_block_nonlocal(mmes::canonical_table(), 4);
    return {scan_ok(scan), fmt("isolated E: %.0f/%.0f assignments UNSAT",
                               double(scan.unsatisfiable_count()), double(scan.results.size()))};
}

Outcome permutation_scan() {
    const auto table = mmes::canonical_table();
    std::size_t unsat = 0;
    bool ok = true;
    for (std::size_t p = 0; p < 5; ++p) {
        const auto scan = mmes::scan_block_nonlocal(table, p);
        ok = ok && scan_ok(scan);
        unsat += scan.unsatisfiable_count();
    }
    ok = ok && unsat == 40;
    return {ok, fmt("%.0f/40 systems UNSAT", double(unsat))};
}

Outcome fully_nonlocal() {
    const auto table = mmes::canonical_table();
    const auto model = mmes::LocalityModel::fully_nonlocal();
    const auto solved = mmes::check_model(table, model);
    const bool ok = solved.satisfiable() && verdict_verified(solved) &&
                    mmes::witness_reproduces_table(table, model, solved);
    return {ok, fmt("SAT over %.0f variables, witness verified", double(solved.system.num_vars()))};
}

Outcome compatibility_count() {
    const auto groups = mmes::minimum_context_cover(mmes::canonical_table());
    std::set<std::vector<std::size_t>> pairs;
    for (const auto& g : groups) {
        if (g.row_indices.size() == 2) {
            pairs.insert(g.row_indices);
        }
    }
    // 0-based rows of the labelled pairs (4,11), (6,10), (7,9).
    const std::set<std::vector<std::size_t>> expected{{2, 9}, {4, 8}, {5, 7}};
    const bool ok = groups.size() == 13 && pairs == expected;
    return {ok, fmt("%.0f groups, %.0f two-row groups match", double(groups.size()),
                    double(pairs.size()))};
}

Outcome protocol_simulation() {
    mmescheck::CommandOptions o;
    o.runs = 100000;
    o.seed = 42;
    o.workers = std::max(1U, std::thread::hardware_concurrency());
    const auto first = mmescheck::run_command("simulate", o);
    const auto second = mmescheck::run_command("simulate", o);
    const auto a = first.to_json().dump(2);
    const auto b = second.to_json().dump(2);
    const auto& results = first.results;
    bool zero_exceptions = true;
    for (const auto& row : results["rows"]) {
        const int expected = row["expected"].get<int>();
        zero_exceptions = zero_exceptions &&
                          row[expected > 0 ? "minus" : "plus"].get<std::uint64_t>() == 0 &&
                          row["samples"].get<std::uint64_t>() > 0;
    }
    const auto rarest = results["rarest_row_samples"].get<std::uint64_t>();
    const bool ok = first.pass && zero_exceptions && rarest >= 100 && a == b;
    return {ok, fmt("1e5 runs seed 42, rarest row %.0f samples, repeat identical: %.0f",
                    double(rarest), a == b ? 1.0 : 0.0)};
}

Outcome property_suites() {
    std::mt19937_64 gen(20260101);
    int solver_cases = 0;
    int verdicts = 0;
    for (; solver_cases < 250; ++solver_cases) {
        const auto system = mmes::oracle::random_parity_system(gen, 20, 24);
        const auto g = mmes::solve_gf2(system);
        const auto b = mmes::solve_bruteforce(system);
        if (g.satisfiable != b.satisfiable || (!g.satisfiable && !g.certificate)) {
            return {false, "solver disagreement"};
        }
        for (const auto* v : {&g, &b}) {
            mmes::check_verdict(system, *v);
            // Brute force proves UNSAT by exhaustion and carries no certificate.
            const bool checked = v->satisfiable
                                     ? mmes::witness_satisfies(system, *v->witness)
                                     : !v->certificate ||
                                           mmes::is_contradiction(system, *v->certificate);
            if (!checked) {
                return {false, "verifier rejected an emitted verdict"};
            }
            ++verdicts;
        }
    }
    int pauli_cases = 0;
    double worst = 0.0;
    for (; pauli_cases < 150; ++pauli_cases) {
        const std::size_t n = 1 + pauli_cases % 6;
        const auto state = mmes::oracle::random_state(n, gen);
        const auto p = mmes::oracle::random_pauli(n, gen);
        worst = std::max(worst, std::abs(mmes::expectation(state, p) -
                                         mmes::dense::expectation(state, p)));
    }
    const bool ok = worst <= 1e-10;
    return {ok, "250 parity systems, " + std::to_string(verdicts) + " verdicts verified, " +
                    fmt("150 Pauli pairs max deviation %.2e", worst)};
}

} // namespace

int main() {
    criterion(1, "state verification", 1, state_verification);
    criterion(2, "correlation reproduction", 10, correlation_reproduction);
    criterion(3, "MMES property", 10, mmes_property);
    criterion(4, "local no-go", 100, local_nogo);
    criterion(5, "central theorem", 100, central_theorem);
    criterion(6, "permutation scan", 1000, permutation_scan);
    criterion(7, "fully nonlocal contrast", 10, fully_nonlocal);
    criterion(8, "compatibility count", 1000, compatibility_count);
    criterion(9, "protocol simulation", 30000, protocol_simulation);
    criterion(10, "property suites", 30000, property_suites);
    std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
