// SPDX-License-Identifier: Apache-2.0
//
// ueant - handheld UE antenna pattern, polarization and blockage modelling
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>

namespace ueant
{

    // 64-bit finalizer from the splitmix64 generator (Vigna / Steele et al.).
    constexpr std::uint64_t mix64(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Deterministic PRNG with explicit substreams.
    //
    // The generator is splitmix64: the state advances by a fixed odd constant
    // and each output is the mixed state. Results are bit-identical on every
    // platform. Substreams for (seed, stream) pairs are decorrelated by mixing
    // the stream index into the initial state, so replications can be drawn in
    // any order, including in parallel, without changing any value.
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : state_(mix64(seed ^ 0x6A09E667F3BCC909ULL)) {}

        Rng(std::uint64_t seed, std::uint64_t stream)
            : state_(mix64(mix64(seed ^ 0x6A09E667F3BCC909ULL) + GOLDEN * (stream + 1))) {}

        std::uint64_t next_u64()
        {
            state_ += GOLDEN;
            return mix64(state_);
        }

        // Uniform in [0, 1) with 53-bit resolution.
        double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

        double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    private:
        static constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL;
        std::uint64_t state_;
    };

} // namespace ueant
