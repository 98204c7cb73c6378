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

#include "mmes/table_io.hpp"

#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "mmes/errors.hpp"

namespace mmes {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<int> parse_sign(std::string_view s) {
    if (s == "+1" || s == "1") {
        return 1;
    }
    if (s == "-1") {
        return -1;
    }
    return std::nullopt;
}

} // namespace

CorrelationTable parse_table(std::string_view text, std::size_t default_parties) {
    std::vector<CorrelationRow> rows;
    std::set<PauliString> seen;
    std::optional<std::size_t> parties;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        ++line_no;
        auto line = text.substr(pos, end - pos);
        pos = end + 1;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) {
            throw TableParseError(line_no, "expected <PauliString>:<+1|-1>");
        }
        const auto ops_text = trim(line.substr(0, colon));
        const auto sign_text = trim(line.substr(colon + 1));

        PauliString ops;
        try {
            ops = PauliString::parse(ops_text);
        } catch (const StructuralError& e) {
            throw TableParseError(line_no, e.what());
        }
        const auto sign = parse_sign(sign_text);
        if (!sign) {
            throw TableParseError(line_no, "sign must be +1 or -1, got '" +
                                               std::string(sign_text) + "'");
        }
        if (!parties) {
            parties = ops.size();
            if (*parties > 16) {
                throw TableParseError(line_no, "at most 16 parties are supported");
            }
        } else if (ops.size() != *parties) {
            throw TableParseError(line_no, "row has " + std::to_string(ops.size()) +
                                               " parties, expected " +
                                               std::to_string(*parties));
        }
        if (!seen.insert(ops).second) {
            throw TableParseError(line_no, "duplicate row " + ops.to_string());
        }
        rows.push_back({std::move(ops), *sign});
    }
    return CorrelationTable(parties.value_or(default_parties), std::move(rows));
}

CorrelationTable load_table(const std::string& path, std::size_t default_parties) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open table file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_table(buffer.str(), default_parties);
}

std::string format_table(const CorrelationTable& table) {
    std::string out;
    for (const auto& row : table.rows()) {
        out += row.operators.to_string();
        out += row.expected_sign > 0 ? ":+1\n" : ":-1\n";
    }
    return out;
}

} // namespace mmes
