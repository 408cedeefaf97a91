// Copyright 2026 The qkdlab authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QKDLAB_RNG_HPP
#define QKDLAB_RNG_HPP

#include <cstdint>
#include <stdexcept>

namespace qkdlab {

inline constexpr std::uint64_t kWeylIncrement = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed for stream `stream_index` under `master_seed`.
///
/// Streams are derived by mixing a Weyl-sequence offset into the master
/// seed: mix64(master_seed + kWeylIncrement * (stream_index + 1)). Round i
/// of an experiment always uses stream i, so results do not depend on the
/// order in which rounds are evaluated.
constexpr std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream_index) {
    return mix64(master_seed + kWeylIncrement * (stream_index + 1));
}

/// Deterministic PRNG (SplitMix64). Small state, cheap to fork per round,
/// identical output on every platform; std:: distributions are avoided for
/// the same reason.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    static Rng for_stream(std::uint64_t master_seed, std::uint64_t stream_index) {
        return Rng(stream_seed(master_seed, stream_index));
    }

    std::uint64_t next_u64() {
        state_ += kWeylIncrement;
        return mix64(state_);
    }

    /// Uniform in [0, 1), 53 significant bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Unbiased coin flip (top bit of the next word).
    bool next_bit() { return (next_u64() >> 63) != 0; }

    /// True with probability p; p must lie in [0, 1].
    bool bernoulli(double p) {
        if (p < 0.0 || p > 1.0) {
            throw std::invalid_argument("bernoulli: probability outside [0, 1]");
        }
        return next_double() < p;
    }

private:
    std::uint64_t state_;
};

} // namespace qkdlab

#endif // QKDLAB_RNG_HPP
