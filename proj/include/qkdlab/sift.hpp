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

#ifndef QKDLAB_SIFT_HPP
#define QKDLAB_SIFT_HPP

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace qkdlab {

/// Indices where both parties chose the same control signal, ascending.
/// Flag sequences are '0'/'1' strings of equal length.
inline std::vector<std::uint64_t> sift(std::string_view alice_flags, std::string_view bob_flags) {
    if (alice_flags.size() != bob_flags.size()) {
        throw std::invalid_argument("sift: flag sequences differ in length");
    }
    std::vector<std::uint64_t> kept;
    for (std::size_t i = 0; i < alice_flags.size(); ++i) {
        if (alice_flags[i] == bob_flags[i]) {
            kept.push_back(i);
        }
    }
    return kept;
}

/// Fraction of sifted positions where the two keys disagree.
inline double qber(std::string_view alice_key, std::string_view bob_key) {
    if (alice_key.empty()) {
        throw std::invalid_argument("qber: empty key");
    }
    if (alice_key.size() != bob_key.size()) {
        throw std::invalid_argument("qber: keys differ in length");
    }
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < alice_key.size(); ++i) {
        if (alice_key[i] != bob_key[i]) {
            ++mismatches;
        }
    }
    return static_cast<double>(mismatches) / static_cast<double>(alice_key.size());
}

} // namespace qkdlab

#endif // QKDLAB_SIFT_HPP
