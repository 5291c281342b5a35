// Copyright 2026 The taco authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "taco/gate.hpp"

#include <stdexcept>

namespace taco {

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CX:
        case GateKind::CZ:
        case GateKind::Swap:
        case GateKind::CP:
            return 2;
        case GateKind::CCX:
            return 3;
        default:
            return 1;
    }
}

int gate_param_count(GateKind kind) {
    switch (kind) {
        case GateKind::CP:
        case GateKind::RZ:
        case GateKind::RX:
        case GateKind::RY:
            return 1;
        case GateKind::U3:
            return 3;
        default:
            return 0;
    }
}

const char* gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X: return "x";
        case GateKind::Y: return "y";
        case GateKind::Z: return "z";
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::T: return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::CX: return "cx";
        case GateKind::CZ: return "cz";
        case GateKind::Swap: return "swap";
        case GateKind::CCX: return "ccx";
        case GateKind::CP: return "cp";
        case GateKind::RZ: return "rz";
        case GateKind::RX: return "rx";
        case GateKind::RY: return "ry";
        case GateKind::U3: return "u3";
        case GateKind::RxPi4: return "rx_pi4";
        case GateKind::RxPi4Dg: return "rx_pi4dg";
        case GateKind::MeasureZ: return "measure";
    }
    return "?";
}

bool is_single_qubit(GateKind kind) { return gate_arity(kind) == 1 && kind != GateKind::MeasureZ; }

bool is_clifford_t(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::H:
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg:
            return true;
        default:
            return false;
    }
}

bool is_pi4_rotation(GateKind kind) {
    return kind == GateKind::T || kind == GateKind::Tdg || kind == GateKind::RxPi4 ||
           kind == GateKind::RxPi4Dg;
}

bool is_pauli(GateKind kind) {
    return kind == GateKind::X || kind == GateKind::Y || kind == GateKind::Z;
}

Gate::Gate(GateKind k, std::vector<std::uint32_t> qs, std::vector<Angle> ps)
    : kind(k), qubits(std::move(qs)), params(std::move(ps)) {
    if (static_cast<int>(qubits.size()) != gate_arity(kind))
        throw std::invalid_argument(std::string("gate ") + gate_name(kind) + ": wrong operand count");
    if (static_cast<int>(params.size()) != gate_param_count(kind))
        throw std::invalid_argument(std::string("gate ") + gate_name(kind) + ": wrong parameter count");
    for (size_t i = 0; i < qubits.size(); ++i)
        for (size_t j = i + 1; j < qubits.size(); ++j)
            if (qubits[i] == qubits[j])
                throw std::invalid_argument(std::string("gate ") + gate_name(kind) + ": repeated operand");
}

bool Gate::operator==(const Gate& other) const {
    return kind == other.kind && qubits == other.qubits && params == other.params;
}

std::string to_string(const Gate& g) {
    std::string s = gate_name(g.kind);
    if (!g.params.empty()) {
        s += "(";
        for (size_t i = 0; i < g.params.size(); ++i) {
            if (i) s += ",";
            s += g.params[i].to_string();
        }
        s += ")";
    }
    for (size_t i = 0; i < g.qubits.size(); ++i) {
        s += (i ? "," : " ") + std::string("q") + std::to_string(g.qubits[i]);
    }
    return s;
}

}  // namespace taco
