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

#include "qkdlab/e91.hpp"

#include <catch2/catch.hpp>

#include <map>

using namespace qkdlab;

TEST_CASE("the pair source emits the even-parity state") {
    const Statevector pair = make_bell_pair();
    const double s = 1.0 / std::sqrt(2.0);
    REQUIRE(std::abs(pair.amps[0] - Complex(s, 0)) < 1e-12);
    REQUIRE(std::abs(pair.amps[1]) < 1e-12);
    REQUIRE(std::abs(pair.amps[2]) < 1e-12);
    REQUIRE(std::abs(pair.amps[3] - Complex(s, 0)) < 1e-12);

    Rng rng(51);
    for (int i = 0; i < 500; ++i) {
        const std::string label = measure_all(pair, rng).label();
        REQUIRE((label == "00" || label == "11"));
    }
}

// Encoding one half and decoding the other restores the pair exactly, for
// both families: the decode matrix is the complex conjugate of the encode
// matrix, which is precisely the condition for the even-parity state to be
// left invariant.
TEST_CASE("matched flags leave the pair amplitudes untouched") {
    const Statevector pair = make_bell_pair();
    for (const BasisFamily* family : {&hadamard_family(), &sx_family()}) {
        INFO("family " << family->name);
        const Statevector state = e91_ideal_state(true, true, *family);
        for (std::size_t i = 0; i < 4; ++i) {
            REQUIRE(std::abs(state.amps[i] - pair.amps[i]) < 1e-12);
        }
        const auto dist = probabilities(state);
        REQUIRE(dist.at("00") == Approx(0.5).margin(1e-12));
        REQUIRE(dist.at("11") == Approx(0.5).margin(1e-12));
        REQUIRE(dist.at("01") == Approx(0.0).margin(1e-12));
        REQUIRE(dist.at("10") == Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("mismatched flags spread the pair over all four outcomes") {
    for (const BasisFamily* family : {&hadamard_family(), &sx_family()}) {
        for (const auto& [alice_flag, bob_flag] : {std::pair{true, false}, {false, true}}) {
            INFO("family " << family->name << " flags " << alice_flag << bob_flag);
            const auto dist = probabilities(e91_ideal_state(alice_flag, bob_flag, *family));
            for (const char* label : {"00", "01", "10", "11"}) {
                REQUIRE(dist.at(label) == Approx(0.25).margin(1e-12));
            }
        }
    }
}

TEST_CASE("matched noiseless rounds always agree") {
    for (const BasisFamily* family : {&hadamard_family(), &sx_family()}) {
        for (std::uint64_t seed = 0; seed < 500; ++seed) {
            Rng rng(seed);
            const PairRound round = e91_round_with(0, true, true, *family, NoiseConfig{}, rng);
            REQUIRE(round.alice_bit == round.bob_bit);
            REQUIRE(round.sifted);
        }
    }
}

TEST_CASE("two independent matched pairs compose into the four-outcome pattern") {
    // Pairs (alice q0, bob q2) and (alice q1, bob q3); the joint label reads
    // q3 q2 q1 q0. Independence makes the joint law the product of the two
    // pair laws, concentrated on 0000, 0101, 1010, 1111 at 1/4 each.
    for (const BasisFamily* family : {&hadamard_family(), &sx_family()}) {
        const auto pair_a = probabilities(e91_ideal_state(true, true, *family));
        const auto pair_b = probabilities(e91_ideal_state(true, true, *family));
        std::map<std::string, double> joint;
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                const int q0 = a & 1, q2 = (a >> 1) & 1;
                const int q1 = b & 1, q3 = (b >> 1) & 1;
                const std::size_t index = static_cast<std::size_t>(q0 | (q1 << 1) | (q2 << 2) |
                                                                   (q3 << 3));
                std::string label(4, '0');
                for (int q = 0; q < 4; ++q) {
                    if (index & (1u << q)) {
                        label[static_cast<std::size_t>(3 - q)] = '1';
                    }
                }
                joint[label] += pair_a.at(outcome_label(static_cast<std::size_t>(a), 2)) *
                                pair_b.at(outcome_label(static_cast<std::size_t>(b), 2));
            }
        }
        INFO("family " << family->name);
        for (const char* label : {"0000", "0101", "1010", "1111"}) {
            REQUIRE(joint.at(label) == Approx(0.25).margin(1e-12));
        }
        REQUIRE(joint.at("0011") == Approx(0.0).margin(1e-12));
        REQUIRE(joint.at("0110") == Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("noiseless pair runs have a zero error rate") {
    for (const BasisFamily* family : {&hadamard_family(), &sx_family()}) {
        const ProtocolTranscript transcript = e91_run(10000, *family, NoiseConfig{}, 42);
        REQUIRE(transcript.protocol == "e91");
        REQUIRE(qber(transcript.alice_key, transcript.bob_key) == 0.0);
        REQUIRE(transcript.alice_key.size() / 10000.0 == Approx(0.5).margin(0.02));
    }
}

TEST_CASE("independent readout noise on both halves doubles the error rate") {
    // Disagreement needs exactly one of the two readouts to flip:
    // 2 * eps * (1 - eps) = 0.095 at eps = 0.05.
    const ProtocolTranscript transcript =
        e91_run(10000, sx_family(), NoiseConfig{0.05, 0.0}, 99);
    REQUIRE(qber(transcript.alice_key, transcript.bob_key) == Approx(0.095).margin(0.013));
}

TEST_CASE("equal seeds reproduce pair runs exactly") {
    const ProtocolTranscript a = e91_run(400, hadamard_family(), NoiseConfig{0.03, 0.02}, 31);
    const ProtocolTranscript b = e91_run(400, hadamard_family(), NoiseConfig{0.03, 0.02}, 31);
    REQUIRE(a.alice_key == b.alice_key);
    REQUIRE(a.bob_key == b.bob_key);
}

TEST_CASE("pair runs need at least one round") {
    REQUIRE_THROWS_AS(e91_run(0, sx_family(), NoiseConfig{}, 1), std::invalid_argument);
}
