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

#ifndef QKDLAB_BASIS_HPP
#define QKDLAB_BASIS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "qkdlab/gates.hpp"

namespace qkdlab {

/// A control-signal design: the sender's encode gate paired with the
/// receiver's decode gate, where decode undoes encode exactly. A flag of 1
/// means "apply the gate", 0 means "leave the qubit alone".
///
/// Two families are supported: "hadamard" (H / H, self-inverse) and "sx"
/// (square-root-of-X / its inverse).
struct BasisFamily {
    std::string name;
    GateKind encode_gate = GateKind::Identity;
    GateKind decode_gate = GateKind::Identity;
};

inline const BasisFamily& hadamard_family() {
    static const BasisFamily family{"hadamard", GateKind::Hadamard, GateKind::Hadamard};
    return family;
}

inline const BasisFamily& sx_family() {
    static const BasisFamily family{"sx", GateKind::SqrtX, GateKind::SqrtXInverse};
    return family;
}

inline const BasisFamily& basis_family(std::string_view name) {
    if (name == "hadamard") {
        return hadamard_family();
    }
    if (name == "sx") {
        return sx_family();
    }
    throw std::invalid_argument("basis_family: unknown family \"" + std::string(name) +
                                "\" (expected \"hadamard\" or \"sx\")");
}

} // namespace qkdlab

#endif // QKDLAB_BASIS_HPP
