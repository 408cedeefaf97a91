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

#ifndef QKDLAB_TRANSCRIPT_HPP
#define QKDLAB_TRANSCRIPT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qkdlab/sift.hpp"

namespace qkdlab {

/// Everything one protocol round produced. For the entangled-pair protocol
/// alice_bit is her measured half; for prepare-and-send it is the bit she
/// prepared. A flag of 1 means the party applied its family gate.
struct RoundRecord {
    std::uint64_t index = 0;
    bool alice_bit = false;
    bool alice_flag = false;
    bool bob_flag = false;
    bool bob_bit = false;
    bool sifted = false;
};

/// Full run transcript: the rounds plus the sifted keys they produced.
struct ProtocolTranscript {
    std::string protocol; // "bb84" | "e91"
    std::string family;   // basis family name
    std::uint64_t master_seed = 0;
    std::vector<RoundRecord> rounds;
    std::string alice_key;
    std::string bob_key;
};

inline std::string alice_flags_of(const std::vector<RoundRecord>& rounds) {
    std::string flags;
    flags.reserve(rounds.size());
    for (const RoundRecord& r : rounds) {
        flags.push_back(r.alice_flag ? '1' : '0');
    }
    return flags;
}

inline std::string bob_flags_of(const std::vector<RoundRecord>& rounds) {
    std::string flags;
    flags.reserve(rounds.size());
    for (const RoundRecord& r : rounds) {
        flags.push_back(r.bob_flag ? '1' : '0');
    }
    return flags;
}

/// Sift the rounds, mark the kept ones, and assemble both keys in index
/// order. Called by the protocol runners after all rounds are collected.
inline void finish_transcript(ProtocolTranscript& transcript) {
    const std::vector<std::uint64_t> kept =
        sift(alice_flags_of(transcript.rounds), bob_flags_of(transcript.rounds));
    transcript.alice_key.clear();
    transcript.bob_key.clear();
    for (RoundRecord& r : transcript.rounds) {
        r.sifted = false;
    }
    for (std::uint64_t index : kept) {
        RoundRecord& r = transcript.rounds[index];
        r.sifted = true;
        transcript.alice_key.push_back(r.alice_bit ? '1' : '0');
        transcript.bob_key.push_back(r.bob_bit ? '1' : '0');
    }
}

} // namespace qkdlab

#endif // QKDLAB_TRANSCRIPT_HPP
