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

#include <stdexcept>
#include <string>

namespace mmes {

/// Malformed or mismatched input: wrong lengths, invalid indices, bad sets.
class StructuralError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Input is well-formed but degenerate, e.g. an all-zero amplitude vector.
class DegenerateInputError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds what an oracle or enumerator is built to handle.
class CapabilityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// A cross-check between two independent computations failed. Always a bug
/// or a corrupted input; never a user error.
class ConsistencyError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace mmes
