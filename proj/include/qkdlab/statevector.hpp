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

#ifndef QKDLAB_STATEVECTOR_HPP
#define QKDLAB_STATEVECTOR_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkdlab/gates.hpp"
#include "qkdlab/rng.hpp"

namespace qkdlab {

/// Exact amplitude vector of a 1- or 2-qubit register. amps[i] is the
/// amplitude of basis ket |i>, with qubit 0 as the least significant bit of
/// i; labels therefore read qubit (n-1) down to qubit 0, left to right.
///
/// Each protocol round is simulated as its own 1-qubit (prepare-and-send) or
/// 2-qubit (entangled-pair) register, which is exact because rounds never
/// entangle with each other. Larger registers are out of contract.
struct Statevector {
    int n_qubits = 1;
    std::vector<Complex> amps;
};

/// |0...0> on n_qubits qubits. n_qubits must be 1 or 2.
inline Statevector zero_state(int n_qubits) {
    if (n_qubits != 1 && n_qubits != 2) {
        throw std::invalid_argument("zero_state: register size must be 1 or 2 qubits");
    }
    Statevector state;
    state.n_qubits = n_qubits;
    state.amps.assign(std::size_t{1} << n_qubits, Complex(0, 0));
    state.amps[0] = Complex(1, 0);
    return state;
}

inline double norm_squared(const Statevector& state) {
    double total = 0.0;
    for (const Complex& a : state.amps) {
        total += std::norm(a);
    }
    return total;
}

inline bool is_normalized(const Statevector& state, double tol = 1e-10) {
    return std::abs(norm_squared(state) - 1.0) <= tol;
}

namespace detail {

inline void check_target(const Statevector& state, int target, const char* what) {
    if (target < 0 || target >= state.n_qubits) {
        throw std::invalid_argument(std::string(what) + ": qubit index out of range");
    }
}

} // namespace detail

/// Apply an arbitrary 2x2 matrix to one qubit. Value semantics: the input
/// state is left untouched.
inline Statevector apply_matrix(const Statevector& state, const Gate2x2& gate, int target) {
    detail::check_target(state, target, "apply_matrix");
    Statevector out = state;
    const std::size_t bit = std::size_t{1} << target;
    const std::size_t dim = state.amps.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit) {
            continue;
        }
        const Complex a0 = state.amps[i];
        const Complex a1 = state.amps[i | bit];
        out.amps[i] = gate.at(0, 0) * a0 + gate.at(0, 1) * a1;
        out.amps[i | bit] = gate.at(1, 0) * a0 + gate.at(1, 1) * a1;
    }
    return out;
}

inline Statevector apply_1q(const Statevector& state, GateKind kind, int target) {
    return apply_matrix(state, gate_matrix(kind), target);
}

/// CNOT: flips `target` on the basis states where `control` is 1.
inline Statevector apply_cnot(const Statevector& state, int control, int target) {
    if (state.n_qubits != 2) {
        throw std::invalid_argument("apply_cnot: requires a 2-qubit register");
    }
    detail::check_target(state, control, "apply_cnot");
    detail::check_target(state, target, "apply_cnot");
    if (control == target) {
        throw std::invalid_argument("apply_cnot: control and target must differ");
    }
    Statevector out = state;
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(out.amps[i], out.amps[i | tbit]);
        }
    }
    return out;
}

/// Label of basis index `index`, qubit (n_qubits-1) first.
inline std::string outcome_label(std::size_t index, int n_qubits) {
    std::string label(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
        if (index & (std::size_t{1} << q)) {
            label[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
        }
    }
    return label;
}

/// Measurement distribution: every outcome label mapped to |amp|^2.
inline std::map<std::string, double> probabilities(const Statevector& state) {
    std::map<std::string, double> dist;
    for (std::size_t i = 0; i < state.amps.size(); ++i) {
        dist[outcome_label(i, state.n_qubits)] = std::norm(state.amps[i]);
    }
    return dist;
}

/// Result of measuring every qubit of a register once.
struct Outcome {
    std::size_t index = 0;
    int n_qubits = 1;

    bool bit(int qubit) const { return (index >> qubit) & 1u; }
    std::string label() const { return outcome_label(index, n_qubits); }
};

/// Sample one terminal measurement of all qubits. Consumes exactly one
/// uniform draw; outcome i is selected by the cumulative |amp|^2 walk in
/// index order.
inline Outcome measure_all(const Statevector& state, Rng& rng) {
    const double u = rng.next_double();
    double cumulative = 0.0;
    const std::size_t dim = state.amps.size();
    for (std::size_t i = 0; i < dim; ++i) {
        cumulative += std::norm(state.amps[i]);
        if (u < cumulative) {
            return Outcome{i, state.n_qubits};
        }
    }
    return Outcome{dim - 1, state.n_qubits};
}

} // namespace qkdlab

#endif // QKDLAB_STATEVECTOR_HPP
