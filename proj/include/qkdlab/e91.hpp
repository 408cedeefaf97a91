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

#ifndef QKDLAB_E91_HPP
#define QKDLAB_E91_HPP

#include <cstdint>
#include <stdexcept>

#include "qkdlab/channel.hpp"
#include "qkdlab/transcript.hpp"

namespace qkdlab {

/// One entangled-pair round. Same record layout as a prepare-and-send
/// round; here alice_bit is measured rather than chosen.
using PairRound = RoundRecord;

/// (|00> + |11>)/sqrt(2), built as H on qubit 0 followed by CNOT(0 -> 1).
inline Statevector make_bell_pair() {
    Statevector state = zero_state(2);
    state = apply_1q(state, GateKind::Hadamard, 0);
    return apply_cnot(state, 0, 1);
}

/// Joint pre-measurement state for fixed flags on a noiseless pair. Alice
/// holds qubit 0 (encode side), Bob qubit 1 (decode side). With matched
/// flags the pair returns to the Bell state; with mismatched flags every
/// joint outcome has probability 1/4.
inline Statevector e91_ideal_state(bool alice_flag, bool bob_flag, const BasisFamily& family) {
    Statevector state = make_bell_pair();
    if (alice_flag) {
        state = apply_1q(state, family.encode_gate, 0);
    }
    if (bob_flag) {
        state = apply_1q(state, family.decode_gate, 1);
    }
    return state;
}

/// One pair round with the flags already chosen.
///
/// Draw order on `rng`: depolarizing on qubit 0, depolarizing on qubit 1,
/// the joint measurement, Alice's readout flip, Bob's readout flip. Both
/// halves are physically measured, so readout error hits both bits.
inline PairRound e91_round_with(std::uint64_t index, bool alice_flag, bool bob_flag,
                                const BasisFamily& family, const NoiseConfig& noise, Rng& rng) {
    check_noise_config(noise);

    Statevector state = e91_ideal_state(alice_flag, bob_flag, family);
    state = apply_depolarizing(state, noise.depolarizing_p, 0, rng);
    state = apply_depolarizing(state, noise.depolarizing_p, 1, rng);

    const Outcome outcome = measure_all(state, rng);
    const bool alice_bit = flip_readout_bit(outcome.bit(0), noise.readout_epsilon, rng);
    const bool bob_bit = flip_readout_bit(outcome.bit(1), noise.readout_epsilon, rng);

    PairRound record;
    record.index = index;
    record.alice_bit = alice_bit;
    record.alice_flag = alice_flag;
    record.bob_flag = bob_flag;
    record.bob_bit = bob_bit;
    record.sifted = (alice_flag == bob_flag);
    return record;
}

/// One full pair round: draws alice_flag then bob_flag as fair coins.
inline PairRound e91_round(std::uint64_t index, const BasisFamily& family,
                           const NoiseConfig& noise, Rng& rng) {
    const bool alice_flag = rng.next_bit();
    const bool bob_flag = rng.next_bit();
    return e91_round_with(index, alice_flag, bob_flag, family, noise, rng);
}

/// n_rounds independent pair rounds, round i on rng stream i of master_seed.
inline ProtocolTranscript e91_run(std::uint64_t n_rounds, const BasisFamily& family,
                                  const NoiseConfig& noise, std::uint64_t master_seed) {
    if (n_rounds == 0) {
        throw std::invalid_argument("e91_run: need at least one round");
    }
    check_noise_config(noise);

    ProtocolTranscript transcript;
    transcript.protocol = "e91";
    transcript.family = family.name;
    transcript.master_seed = master_seed;
    transcript.rounds.reserve(n_rounds);
    for (std::uint64_t i = 0; i < n_rounds; ++i) {
        Rng rng = Rng::for_stream(master_seed, i);
        transcript.rounds.push_back(e91_round(i, family, noise, rng));
    }
    finish_transcript(transcript);
    return transcript;
}

} // namespace qkdlab

#endif // QKDLAB_E91_HPP
