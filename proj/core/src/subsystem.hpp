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
#include <span>
#include <vector>

namespace mmes::detail {

/// Sorted, deduplicated subsystem; throws StructuralError when empty, out of
/// range, or covering every qubit.
std::vector<std::size_t> normalize_subsystem(std::size_t num_qubits,
                                             std::span<const std::size_t> kept);

} // namespace mmes::detail
