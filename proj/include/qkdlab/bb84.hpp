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

#ifndef QKDLAB_BB84_HPP
#define QKDLAB_BB84_HPP

#include <cstdint>
#include <stdexcept>

#include "qkdlab/channel.hpp"
#include "qkdlab/transcript.hpp"

namespace qkdlab {

/// Bob's pre-measurement state for fixed round inputs on a noiseless,
/// adversary-free channel: prepare |alice_bit>, encode if alice_flag,
/// decode if bob_flag. Exposed so the protocol cases can be checked against
/// exact distributions instead of sampled ones.
inline Statevector bb84_ideal_state(bool alice_bit, bool alice_flag, bool bob_flag,
                                    const BasisFamily& family) {
    Statevector state = zero_state(1);
    if (alice_bit) {
        state = apply_1q(state, GateKind::NotX, 0);
    }
    if (alice_flag) {
        state = apply_1q(state, family.encode_gate, 0);
    }
    if (bob_flag) {
        state = apply_1q(state, family.decode_gate, 0);
    }
    return state;
}

/// One prepare-and-send round with the three random choices already made.
///
/// Draw order on `rng`: channel draws (adversary guess and measurement when
/// enabled, then the depolarizing event), Bob's measurement, Bob's readout
/// flip. Alice's bit is the value she prepared, never a measurement, so
/// readout error applies to Bob only.
inline RoundRecord bb84_round_with(std::uint64_t index, bool alice_bit, bool alice_flag,
                                   bool bob_flag, const BasisFamily& family,
                                   const NoiseConfig& noise, const EveConfig& eve, Rng& rng) {
    check_noise_config(noise);

    Statevector state = zero_state(1);
    if (alice_bit) {
        state = apply_1q(state, GateKind::NotX, 0);
    }
    if (alice_flag) {
        state = apply_1q(state, family.encode_gate, 0);
    }

    state = transmit(state, 0, noise, eve, family, rng);

    if (bob_flag) {
        state = apply_1q(state, family.decode_gate, 0);
    }
    bool bob_bit = measure_all(state, rng).bit(0);
    bob_bit = flip_readout_bit(bob_bit, noise.readout_epsilon, rng);

    RoundRecord record;
    record.index = index;
    record.alice_bit = alice_bit;
    record.alice_flag = alice_flag;
    record.bob_flag = bob_flag;
    record.bob_bit = bob_bit;
    record.sifted = (alice_flag == bob_flag);
    return record;
}

/// One full round: draws alice_bit, alice_flag, bob_flag (each a fair coin,
/// in that order) and plays the round out.
inline RoundRecord bb84_round(std::uint64_t index, const BasisFamily& family,
                              const NoiseConfig& noise, const EveConfig& eve, Rng& rng) {
    const bool alice_bit = rng.next_bit();
    const bool alice_flag = rng.next_bit();
    const bool bob_flag = rng.next_bit();
    return bb84_round_with(index, alice_bit, alice_flag, bob_flag, family, noise, eve, rng);
}

/// n_rounds independent rounds, round i on rng stream i of master_seed.
/// Deterministic for a fixed seed regardless of evaluation order.
inline ProtocolTranscript bb84_run(std::uint64_t n_rounds, const BasisFamily& family,
                                   const NoiseConfig& noise, const EveConfig& eve,
                                   std::uint64_t master_seed) {
    if (n_rounds == 0) {
        throw std::invalid_argument("bb84_run: need at least one round");
    }
    check_noise_config(noise);

    ProtocolTranscript transcript;
    transcript.protocol = "bb84";
    transcript.family = family.name;
    transcript.master_seed = master_seed;
    transcript.rounds.reserve(n_rounds);
    for (std::uint64_t i = 0; i < n_rounds; ++i) {
        Rng rng = Rng::for_stream(master_seed, i);
        transcript.rounds.push_back(bb84_round(i, family, noise, eve, rng));
    }
    finish_transcript(transcript);
    return transcript;
}

} // namespace qkdlab

#endif // QKDLAB_BB84_HPP
