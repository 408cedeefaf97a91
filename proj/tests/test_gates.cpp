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

#include "qkdlab/gates.hpp"

#include <catch2/catch.hpp>

using namespace qkdlab;

namespace {

const std::array<GateKind, 5> kAllGates{GateKind::Identity, GateKind::NotX, GateKind::Hadamard,
                                        GateKind::SqrtX, GateKind::SqrtXInverse};

Gate2x2 identity_matrix() {
    return {{Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)}};
}

} // namespace

TEST_CASE("every gate matrix is unitary") {
    for (GateKind kind : kAllGates) {
        INFO("gate " << gate_name(kind));
        REQUIRE(is_unitary(gate_matrix(kind), 1e-12));
    }
}

TEST_CASE("gate matrix entries match their definitions") {
    const double s = 1.0 / std::sqrt(2.0);
    const Gate2x2 h = gate_matrix(GateKind::Hadamard);
    REQUIRE(h.at(0, 0) == Complex(s, 0));
    REQUIRE(h.at(0, 1) == Complex(s, 0));
    REQUIRE(h.at(1, 0) == Complex(s, 0));
    REQUIRE(h.at(1, 1) == Complex(-s, 0));

    const Gate2x2 sx = gate_matrix(GateKind::SqrtX);
    REQUIRE(sx.at(0, 0) == Complex(0.5, 0.5));
    REQUIRE(sx.at(0, 1) == Complex(0.5, -0.5));
    REQUIRE(sx.at(1, 0) == Complex(0.5, -0.5));
    REQUIRE(sx.at(1, 1) == Complex(0.5, 0.5));

    const Gate2x2 x = gate_matrix(GateKind::NotX);
    REQUIRE(x.at(0, 0) == Complex(0, 0));
    REQUIRE(x.at(0, 1) == Complex(1, 0));
}

// The algebra that makes the two basis families work: squaring the
// half-turn gives the full bit flip, and each decode matrix inverts its
// encode matrix exactly.
TEST_CASE("gate algebra identities hold to 1e-12") {
    const Gate2x2 sx = gate_matrix(GateKind::SqrtX);
    const Gate2x2 sxdg = gate_matrix(GateKind::SqrtXInverse);
    const Gate2x2 h = gate_matrix(GateKind::Hadamard);

    REQUIRE(approx_equal(matmul(sx, sx), gate_matrix(GateKind::NotX), 1e-12));
    REQUIRE(approx_equal(matmul(sxdg, sx), identity_matrix(), 1e-12));
    REQUIRE(approx_equal(matmul(sx, sxdg), identity_matrix(), 1e-12));
    REQUIRE(approx_equal(matmul(h, h), identity_matrix(), 1e-12));
    REQUIRE(approx_equal(adjoint(sx), sxdg, 1e-12));
}

TEST_CASE("adjoint conjugate-transposes") {
    const Gate2x2 g{{Complex(1, 2), Complex(3, -4), Complex(-5, 6), Complex(7, 8)}};
    const Gate2x2 a = adjoint(g);
    REQUIRE(a.at(0, 0) == Complex(1, -2));
    REQUIRE(a.at(0, 1) == Complex(-5, -6));
    REQUIRE(a.at(1, 0) == Complex(3, 4));
    REQUIRE(a.at(1, 1) == Complex(7, -8));
}
