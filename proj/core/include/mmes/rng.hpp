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

#include <cstdint>
#include <random>

namespace mmes {

/// Reproducible random stream for the protocol simulator.
///
/// Bit-stream contract: the engine is std::mt19937_64 seeded through
/// std::seed_seq{seed_lo, seed_hi, stream_lo, stream_hi} (32-bit halves of the
/// two 64-bit inputs). Both are fully specified by the C++ standard, so the
/// raw 64-bit output is identical on every conforming implementation. The
/// derived draws below never use <random> distributions:
///   uniform_below(n): rejection on x >= 2^64 - (2^64 mod n), then x mod n;
///   uniform_unit():   (x >> 11) * 2^-53, in [0, 1).
class ProtocolRng {
  public:
    ProtocolRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64() { return engine_(); }
    std::uint64_t uniform_below(std::uint64_t bound);
    double uniform_unit();

  private:
    std::mt19937_64 engine_;
};

} // namespace mmes
