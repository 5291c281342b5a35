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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "taco/angle.hpp"

namespace taco {

enum class GateKind {
    X, Y, Z, H, S, Sdg, T, Tdg,
    CX, CZ, Swap, CCX, CP,
    RZ, RX, RY, U3,
    RxPi4, RxPi4Dg,
    MeasureZ,
};

/// Number of qubit operands for a gate kind.
int gate_arity(GateKind kind);
/// Number of angle parameters for a gate kind (0 except rotations; U3: 3).
int gate_param_count(GateKind kind);
/// Lower-case OpenQASM-style name ("cx", "sdg", ...).
const char* gate_name(GateKind kind);
bool is_single_qubit(GateKind kind);
bool is_clifford_t(GateKind kind);  // {X,Y,Z,H,S,Sdg,T,Tdg}
bool is_pi4_rotation(GateKind kind);  // {T,Tdg,RxPi4,RxPi4Dg}
bool is_pauli(GateKind kind);

/// One gate application: kind, qubit operands in declaration order, and
/// angle parameters. Operands must be distinct; parameter arity must
/// match the kind. Construct through the named factories or the checked
/// constructor.
struct Gate {
    GateKind kind;
    std::vector<std::uint32_t> qubits;
    std::vector<Angle> params;

    Gate(GateKind k, std::vector<std::uint32_t> qs, std::vector<Angle> ps = {});

    static Gate x(std::uint32_t q) { return {GateKind::X, {q}}; }
    static Gate y(std::uint32_t q) { return {GateKind::Y, {q}}; }
    static Gate z(std::uint32_t q) { return {GateKind::Z, {q}}; }
    static Gate h(std::uint32_t q) { return {GateKind::H, {q}}; }
    static Gate s(std::uint32_t q) { return {GateKind::S, {q}}; }
    static Gate sdg(std::uint32_t q) { return {GateKind::Sdg, {q}}; }
    static Gate t(std::uint32_t q) { return {GateKind::T, {q}}; }
    static Gate tdg(std::uint32_t q) { return {GateKind::Tdg, {q}}; }
    static Gate rx_pi4(std::uint32_t q) { return {GateKind::RxPi4, {q}}; }
    static Gate rx_pi4dg(std::uint32_t q) { return {GateKind::RxPi4Dg, {q}}; }
    static Gate cx(std::uint32_t c, std::uint32_t t) { return {GateKind::CX, {c, t}}; }
    static Gate cz(std::uint32_t a, std::uint32_t b) { return {GateKind::CZ, {a, b}}; }
    static Gate swap(std::uint32_t a, std::uint32_t b) { return {GateKind::Swap, {a, b}}; }
    static Gate ccx(std::uint32_t a, std::uint32_t b, std::uint32_t t) { return {GateKind::CCX, {a, b, t}}; }
    static Gate cp(const Angle& theta, std::uint32_t c, std::uint32_t t) {
        return {GateKind::CP, {c, t}, {theta}};
    }
    static Gate rz(const Angle& theta, std::uint32_t q) { return {GateKind::RZ, {q}, {theta}}; }
    static Gate rx(const Angle& theta, std::uint32_t q) { return {GateKind::RX, {q}, {theta}}; }
    static Gate ry(const Angle& theta, std::uint32_t q) { return {GateKind::RY, {q}, {theta}}; }
    static Gate u3(const Angle& theta, const Angle& phi, const Angle& lambda, std::uint32_t q) {
        return {GateKind::U3, {q}, {theta, phi, lambda}};
    }
    static Gate measure_z(std::uint32_t q) { return {GateKind::MeasureZ, {q}}; }

    bool operator==(const Gate& other) const;
    bool operator!=(const Gate& other) const { return !(*this == other); }
};

std::string to_string(const Gate& g);

}  // namespace taco
