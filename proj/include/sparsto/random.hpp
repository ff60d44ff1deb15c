// Copyright 2026 The sparsto Authors
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

namespace sparsto {

/// Portable random stream.
///
/// The engine is std::mt19937_64 seeded through std::seed_seq, both fully
/// specified by the standard. Variates are derived here instead of through the
/// <random> distributions, whose algorithms are implementation-defined, so a
/// (seed, index) pair produces the same draws on every platform.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);

    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Substream for one unit of work, e.g. one repeat of a schedule or one Monte
/// Carlo sample. Substreams for distinct indices are independent of each other
/// and of generation order.
inline RandomStream substream(std::uint64_t seed, std::uint64_t index) {
    return RandomStream(seed, index);
}

}  // namespace sparsto
