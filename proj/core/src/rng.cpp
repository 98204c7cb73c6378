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

#include "mmes/rng.hpp"

#include <limits>

#include "mmes/errors.hpp"

namespace mmes {

ProtocolRng::ProtocolRng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

std::uint64_t ProtocolRng::uniform_below(std::uint64_t bound) {
    if (bound == 0) {
        throw StructuralError("uniform_below bound must be positive");
    }
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    // Largest multiple of bound that fits: values at or above it are redrawn.
    const std::uint64_t excess = (kMax % bound + 1) % bound;
    const std::uint64_t limit = kMax - excess;
    for (;;) {
        const auto x = engine_();
        if (excess == 0 || x <= limit) {
            return x % bound;
        }
    }
}

double ProtocolRng::uniform_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

} // namespace mmes
