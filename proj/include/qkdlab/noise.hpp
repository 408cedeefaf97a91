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

#ifndef QKDLAB_NOISE_HPP
#define QKDLAB_NOISE_HPP

#include <stdexcept>
#include <string>

#include "qkdlab/rng.hpp"
#include "qkdlab/statevector.hpp"

namespace qkdlab {

/// Stochastic error knobs emulating real-hardware behaviour.
/// readout_epsilon flips each measured bit independently; depolarizing_p
/// hits each transmitted qubit with a uniformly random Pauli.
struct NoiseConfig {
    double readout_epsilon = 0.0;
    double depolarizing_p = 0.0;
};

inline void check_noise_config(const NoiseConfig& noise) {
    if (noise.readout_epsilon < 0.0 || noise.readout_epsilon > 1.0) {
        throw std::invalid_argument("NoiseConfig: readout_epsilon outside [0, 1]");
    }
    if (noise.depolarizing_p < 0.0 || noise.depolarizing_p > 1.0) {
        throw std::invalid_argument("NoiseConfig: depolarizing_p outside [0, 1]");
    }
}

/// Trajectory depolarizing channel: with probability p applies X, Y or Z
/// (equally likely) to `target`, otherwise leaves the state alone.
///
/// Consumes exactly one uniform draw u; the Pauli branch is recovered from
/// the same draw as floor(3u/p), which is uniform on {0,1,2} given u < p.
inline Statevector apply_depolarizing(const Statevector& state, double p, int target, Rng& rng) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("apply_depolarizing: probability outside [0, 1]");
    }
    detail::check_target(state, target, "apply_depolarizing");
    const double u = rng.next_double();
    if (u >= p) {
        return state;
    }
    int branch = static_cast<int>(3.0 * u / p);
    if (branch > 2) {
        branch = 2;
    }
    static const Gate2x2 kPauliX = gate_matrix(GateKind::NotX);
    static const Gate2x2 kPauliY{{Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0)}};
    static const Gate2x2 kPauliZ{{Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0)}};
    switch (branch) {
        case 0: return apply_matrix(state, kPauliX, target);
        case 1: return apply_matrix(state, kPauliY, target);
        default: return apply_matrix(state, kPauliZ, target);
    }
}

/// Readout error on a single classical bit. One draw.
inline bool flip_readout_bit(bool bit, double epsilon, Rng& rng) {
    if (epsilon < 0.0 || epsilon > 1.0) {
        throw std::invalid_argument("flip_readout_bit: probability outside [0, 1]");
    }
    return rng.bernoulli(epsilon) ? !bit : bit;
}

/// Readout error on a bitstring of '0'/'1' characters; each bit flips
/// independently with probability epsilon. One draw per bit.
inline std::string flip_readout(std::string bits, double epsilon, Rng& rng) {
    if (epsilon < 0.0 || epsilon > 1.0) {
        throw std::invalid_argument("flip_readout: probability outside [0, 1]");
    }
    for (char& c : bits) {
        if (rng.bernoulli(epsilon)) {
            c = (c == '0') ? '1' : '0';
        }
    }
    return bits;
}

} // namespace qkdlab

#endif // QKDLAB_NOISE_HPP
