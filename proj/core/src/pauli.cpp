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

#include "mmes/pauli.hpp"

#include <algorithm>

#include "mmes/errors.hpp"

namespace mmes {

char to_char(PauliAxis axis) noexcept {
    switch (axis) {
    case PauliAxis::X:
        return 'X';
    case PauliAxis::Y:
        return 'Y';
    case PauliAxis::Z:
        return 'Z';
    case PauliAxis::I:
        break;
    }
    return 'I';
}

char to_lower_char(PauliAxis axis) noexcept {
    return static_cast<char>(to_char(axis) - 'A' + 'a');
}

std::optional<PauliAxis> axis_from_char(char c) noexcept {
    switch (c) {
    case 'I':
    case 'i':
    case '1':
        return PauliAxis::I;
    case 'X':
    case 'x':
        return PauliAxis::X;
    case 'Y':
    case 'y':
        return PauliAxis::Y;
    case 'Z':
    case 'z':
        return PauliAxis::Z;
    default:
        return std::nullopt;
    }
}

PauliString PauliString::parse(std::string_view text) {
    if (text.empty()) {
        throw StructuralError("empty Pauli string");
    }
    std::vector<PauliAxis> axes;
    axes.reserve(text.size());
    for (char c : text) {
        auto axis = axis_from_char(c);
        if (!axis) {
            throw StructuralError("invalid Pauli character '" + std::string(1, c) +
                                  "' in \"" + std::string(text) + "\"");
        }
        axes.push_back(*axis);
    }
    return PauliString(std::move(axes));
}

PauliString PauliString::identity(std::size_t num_qubits) {
    return PauliString(std::vector<PauliAxis>(num_qubits, PauliAxis::I));
}

std::size_t PauliString::weight() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        axes_.begin(), axes_.end(), [](PauliAxis a) { return a != PauliAxis::I; }));
}

std::string PauliString::to_string() const {
    std::string out;
    out.reserve(axes_.size());
    for (auto a : axes_) {
        out.push_back(to_char(a));
    }
    return out;
}

} // namespace mmes
