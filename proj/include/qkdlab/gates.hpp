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

#ifndef QKDLAB_GATES_HPP
#define QKDLAB_GATES_HPP

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qkdlab {

using Complex = std::complex<double>;

/// Single-qubit gate alphabet used by the protocols. NotX flips a basis
/// state; Hadamard, SqrtX and SqrtXInverse each turn |0> or |1> into a
/// uniform superposition.
enum class GateKind {
    Identity,
    NotX,
    Hadamard,
    SqrtX,
    SqrtXInverse,
};

/// 2x2 complex matrix, row major.
struct Gate2x2 {
    std::array<Complex, 4> m{};

    Complex at(int row, int col) const { return m[static_cast<std::size_t>(row * 2 + col)]; }
    Complex& at(int row, int col) { return m[static_cast<std::size_t>(row * 2 + col)]; }
};

inline Gate2x2 matmul(const Gate2x2& a, const Gate2x2& b) {
    Gate2x2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out.at(r, c) = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
        }
    }
    return out;
}

inline Gate2x2 adjoint(const Gate2x2& g) {
    Gate2x2 out;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            out.at(r, c) = std::conj(g.at(c, r));
        }
    }
    return out;
}

inline bool approx_equal(const Gate2x2& a, const Gate2x2& b, double tol) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::abs(a.m[i] - b.m[i]) > tol) {
            return false;
        }
    }
    return true;
}

/// U is unitary iff U†U = I entrywise within tol.
inline bool is_unitary(const Gate2x2& g, double tol = 1e-12) {
    Gate2x2 identity{{Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)}};
    return approx_equal(matmul(adjoint(g), g), identity, tol);
}

/// The fixed unitary for each gate kind.
inline Gate2x2 gate_matrix(GateKind kind) {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    switch (kind) {
        case GateKind::Identity:
            return {{Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(1, 0)}};
        case GateKind::NotX:
            return {{Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)}};
        case GateKind::Hadamard:
            return {{Complex(inv_sqrt2, 0), Complex(inv_sqrt2, 0), Complex(inv_sqrt2, 0),
                     Complex(-inv_sqrt2, 0)}};
        case GateKind::SqrtX:
            return {{Complex(0.5, 0.5), Complex(0.5, -0.5), Complex(0.5, -0.5), Complex(0.5, 0.5)}};
        case GateKind::SqrtXInverse:
            return {{Complex(0.5, -0.5), Complex(0.5, 0.5), Complex(0.5, 0.5), Complex(0.5, -0.5)}};
    }
    throw std::invalid_argument("gate_matrix: unknown gate kind");
}

inline std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::Identity: return "id";
        case GateKind::NotX: return "x";
        case GateKind::Hadamard: return "h";
        case GateKind::SqrtX: return "sx";
        case GateKind::SqrtXInverse: return "sxdg";
    }
    throw std::invalid_argument("gate_name: unknown gate kind");
}

} // namespace qkdlab

#endif // QKDLAB_GATES_HPP
