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

#include <sstream>

#include "commands.hpp"

namespace mmescheck {
namespace {

bool is_scalar_array(const Json& j) {
    if (!j.is_array()) {
        return false;
    }
    for (const auto& e : j) {
        if (e.is_structured()) {
            return false;
        }
    }
    return true;
}

std::string scalar(const Json& j) {
    return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string inline_array(const Json& j) {
    std::string out = "[";
    bool first = true;
    for (const auto& e : j) {
        if (!first) {
            out += ", ";
        }
        out += scalar(e);
        first = false;
    }
    return out + "]";
}

// YAML-like rendering that prints every value the JSON form carries.
void render(std::ostream& out, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_structured() && !value.empty() && !is_scalar_array(value)) {
                out << pad << key << ":\n";
                render(out, value, indent + 2);
            } else if (is_scalar_array(value)) {
                out << pad << key << ": " << inline_array(value) << "\n";
            } else if (value.is_object()) {
                out << pad << key << ": {}\n";
            } else {
                out << pad << key << ": " << scalar(value) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_object() && !e.empty()) {
                std::ostringstream nested;
                render(nested, e, indent + 2);
                auto text = nested.str();
                // First line of the item carries the list marker.
                text.replace(static_cast<std::size_t>(indent), 2, "- ");
                out << text;
            } else if (is_scalar_array(e)) {
                out << pad << "- " << inline_array(e) << "\n";
            } else {
                out << pad << "- " << scalar(e) << "\n";
            }
        }
    } else {
        out << pad << scalar(j) << "\n";
    }
}

} // namespace

std::string ReportEnvelope::to_text() const {
    std::ostringstream out;
    out << "mmescheck " << command << ": " << (pass ? "PASS" : "FAIL") << " (exit "
        << exit_code << ", version " << version << ")\n";
    if (!inputs.empty()) {
        out << "inputs:\n";
        render(out, inputs, 2);
    }
    if (!warnings.empty()) {
        out << "warnings:\n";
        for (const auto& w : warnings) {
            out << "  - " << w << "\n";
        }
    }
    out << "results:\n";
    render(out, results, 2);
    return out.str();
}

} // namespace mmescheck
