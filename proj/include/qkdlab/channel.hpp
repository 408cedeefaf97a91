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

#ifndef QKDLAB_CHANNEL_HPP
#define QKDLAB_CHANNEL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qkdlab/basis.hpp"
#include "qkdlab/noise.hpp"
#include "qkdlab/statevector.hpp"

namespace qkdlab {

enum class EveStrategy {
    /// Measure each transiting qubit in a randomly guessed basis flag of the
    /// active family, then forward a re-prepared qubit.
    InterceptResend,
};

struct EveConfig {
    bool enabled = false;
    EveStrategy strategy = EveStrategy::InterceptResend;
};

/// Marginal probability of reading `value` on `target`, plus the normalized
/// post-measurement state. When the marginal is zero the returned state is
/// all-zero amplitudes and must not be used.
inline std::pair<double, Statevector> project_qubit(const Statevector& state, int target,
                                                    bool value) {
    detail::check_target(state, target, "project_qubit");
    const std::size_t bit = std::size_t{1} << target;
    double marginal = 0.0;
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        if (((i & bit) != 0) == value) {
            marginal += std::norm(state.amps[i]);
        }
    }
    Statevector post = state;
    const double scale = marginal > 0.0 ? 1.0 / std::sqrt(marginal) : 0.0;
    for (std::size_t i = 0; i < post.amps.size(); ++i) {
        post.amps[i] = (((i & bit) != 0) == value) ? post.amps[i] * scale : Complex(0, 0);
    }
    return {marginal, post};
}

/// Measure one qubit and collapse the register onto the observed value.
/// One uniform draw; value 0 wins when the draw falls below its marginal.
inline std::pair<bool, Statevector> measure_and_collapse(const Statevector& state, int target,
                                                         Rng& rng) {
    detail::check_target(state, target, "measure_and_collapse");
    const double p0 = project_qubit(state, target, false).first;
    const bool value = !(rng.next_double() < p0);
    return {value, project_qubit(state, target, value).second};
}

/// One intercept-resend action with a fixed basis guess. Eve decodes if her
/// guess says the qubit was encoded, measures it, forwards the re-prepared
/// bit, and re-encodes when she decoded first.
inline Statevector eve_intercept(const Statevector& state, int target, bool eve_flag,
                                 const BasisFamily& family, Rng& rng) {
    Statevector current = state;
    if (eve_flag) {
        current = apply_1q(current, family.decode_gate, target);
    }
    current = measure_and_collapse(current, target, rng).second;
    if (eve_flag) {
        current = apply_1q(current, family.encode_gate, target);
    }
    return current;
}

/// Send one qubit through the quantum channel: the adversary acts first
/// (basis guess drawn uniformly), then depolarizing noise. Readout error is
/// not applied here; it belongs to the receiver's measurement.
inline Statevector transmit(const Statevector& state, int target, const NoiseConfig& noise,
                            const EveConfig& eve, const BasisFamily& family, Rng& rng) {
    detail::check_target(state, target, "transmit");
    check_noise_config(noise);
    Statevector current = state;
    if (eve.enabled) {
        const bool eve_flag = rng.next_bit();
        current = eve_intercept(current, target, eve_flag, family, rng);
    }
    return apply_depolarizing(current, noise.depolarizing_p, target, rng);
}

/// Payloads exchanged over the reliable, authenticated classical channel.
struct ClassicalMessage {
    enum class Kind { BasisSequence, MatchIndices };

    Kind kind = Kind::BasisSequence;
    std::string sender;                 // BasisSequence only
    std::string flags;                  // BasisSequence only, '0'/'1' per round
    std::vector<std::uint64_t> indices; // MatchIndices only, strictly increasing
};

inline ClassicalMessage make_basis_sequence(std::string sender, std::string flags) {
    for (char c : flags) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("make_basis_sequence: flags must be '0'/'1'");
        }
    }
    ClassicalMessage msg;
    msg.kind = ClassicalMessage::Kind::BasisSequence;
    msg.sender = std::move(sender);
    msg.flags = std::move(flags);
    return msg;
}

inline ClassicalMessage make_match_indices(std::vector<std::uint64_t> indices,
                                           std::uint64_t round_count) {
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] >= round_count) {
            throw std::invalid_argument("make_match_indices: index beyond round count");
        }
        if (i > 0 && indices[i] <= indices[i - 1]) {
            throw std::invalid_argument("make_match_indices: indices must be strictly increasing");
        }
    }
    ClassicalMessage msg;
    msg.kind = ClassicalMessage::Kind::MatchIndices;
    msg.indices = std::move(indices);
    return msg;
}

} // namespace qkdlab

#endif // QKDLAB_CHANNEL_HPP
