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
#include <stdexcept>
#include <string>
#include <string_view>

#include "mmes/correlations.hpp"

namespace mmes {

/// Raised by parse_table with the 1-based line that failed.
class TableParseError : public std::runtime_error {
  public:
    TableParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

/// Parses the line format `<PauliString>:<+1|-1>`. `#` starts a comment and
/// blank lines are skipped. An empty file yields an empty table with
/// `default_parties` parties.
[[nodiscard]] CorrelationTable parse_table(std::string_view text,
                                           std::size_t default_parties = 5);

/// Reads and parses a file. I/O failures throw std::runtime_error.
[[nodiscard]] CorrelationTable load_table(const std::string& path,
                                          std::size_t default_parties = 5);

/// Inverse of parse_table, one row per line.
[[nodiscard]] std::string format_table(const CorrelationTable& table);

} // namespace mmes
