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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmes {

enum class PauliAxis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline constexpr PauliAxis kMeasurableAxes[] = {PauliAxis::X, PauliAxis::Y,
                                                PauliAxis::Z};

[[nodiscard]] char to_char(PauliAxis axis) noexcept;

/// Lower-case axis letter used for hidden-variable names: x, y, z (i for I).
[[nodiscard]] char to_lower_char(PauliAxis axis) noexcept;

/// Accepts I, X, Y, Z (either case) and '1' as an alias for I.
[[nodiscard]] std::optional<PauliAxis> axis_from_char(char c) noexcept;

/// One single-qubit Pauli operator per party. Index k acts on qubit k, and
/// qubit 0 is the most significant bit of a basis index.
class PauliString {
  public:
    PauliString() = default;
    explicit PauliString(std::vector<PauliAxis> axes) : axes_(std::move(axes)) {}

    /// Parses the text form, e.g. "ZXXII" or "ZXX11". Throws StructuralError.
    static PauliString parse(std::string_view text);

    /// All-identity string on `num_qubits` parties.
    static PauliString identity(std::size_t num_qubits);

    [[nodiscard]] std::size_t size() const noexcept { return axes_.size(); }
    [[nodiscard]] PauliAxis operator[](std::size_t k) const { return axes_[k]; }
    [[nodiscard]] const std::vector<PauliAxis>& axes() const noexcept {
        return axes_;
    }
    [[nodiscard]] auto begin() const noexcept { return axes_.begin(); }
    [[nodiscard]] auto end() const noexcept { return axes_.end(); }

    /// Number of non-identity factors.
    [[nodiscard]] std::size_t weight() const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const PauliString&, const PauliString&) = default;
    friend bool operator==(const PauliString&, const PauliString&) = default;

  private:
    std::vector<PauliAxis> axes_;
};

} // namespace mmes
