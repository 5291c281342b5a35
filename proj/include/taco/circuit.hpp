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
#include <map>
#include <string>
#include <vector>

#include "taco/gate.hpp"

namespace taco {

/// An ordered logical-gate program over indexed qubits. Gates are stored
/// in application order: index 0 is applied first, so the circuit's
/// unitary is M(g_last) * ... * M(g_0). Measurements may only appear as a
/// terminal suffix (no further gate touches a measured qubit).
struct Circuit {
    std::uint32_t num_qubits = 0;
    std::vector<Gate> gates;
    std::string name;
    std::map<std::string, std::string> metadata;

    Circuit() = default;
    explicit Circuit(std::uint32_t n, std::string circuit_name = "")
        : num_qubits(n), name(std::move(circuit_name)) {}

    /// Appends with operand-range and measurement-suffix validation.
    /// Maintains a measured-qubit cache; code that edits `gates` directly
    /// should call validate() when done.
    void append(Gate g);

    /// Re-validates all structural invariants; throws std::invalid_argument.
    void validate() const;

    bool operator==(const Circuit& other) const {
        return num_qubits == other.num_qubits && gates == other.gates;
    }

  private:
    std::vector<bool> measured_;
};

/// Per-kind gate counts plus the derived totals used throughout the
/// report pipeline.
struct GateCounts {
    std::map<GateKind, std::int64_t> by_kind;

    std::int64_t count(GateKind k) const;
    /// T + Tdg + RxPi4 + RxPi4Dg.
    std::int64_t t_count() const;
    /// H + S + Sdg + CX + Paulis.
    std::int64_t clifford_count() const;
    /// Rotation parameters that are not (within tolerance) multiples of
    /// pi/4; U3 contributes each of its three angles separately.
    std::int64_t nontrivial_rz_count() const;
    std::int64_t total() const;

    std::int64_t nontrivial_rz = 0;
};

GateCounts gate_counts(const Circuit& c);

/// Number of rotation parameters in `c` requiring approximate synthesis:
/// angles of RZ/RX/RY (and each U3 angle) not within tolerance of a
/// multiple of pi/2 nor an odd multiple of pi/4.
std::int64_t rz_count(const Circuit& c);
bool angle_needs_synthesis(const Angle& a);

}  // namespace taco
