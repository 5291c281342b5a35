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

#include "taco/circuit.hpp"

#include <stdexcept>

namespace taco {

namespace {
void check_gate(const Circuit& c, const Gate& g, const std::vector<bool>& measured) {
    for (auto q : g.qubits) {
        if (q >= c.num_qubits)
            throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range (n=" +
                                        std::to_string(c.num_qubits) + ")");
        if (measured[q])
            throw std::invalid_argument("gate on qubit " + std::to_string(q) + " after measurement");
    }
}
}  // namespace

void Circuit::append(Gate g) {
    measured_.resize(num_qubits, false);
    check_gate(*this, g, measured_);
    if (g.kind == GateKind::MeasureZ) measured_[g.qubits[0]] = true;
    gates.push_back(std::move(g));
}

void Circuit::validate() const {
    std::vector<bool> measured(num_qubits, false);
    for (const auto& g : gates) {
        check_gate(*this, g, measured);
        if (g.kind == GateKind::MeasureZ) measured[g.qubits[0]] = true;
    }
}

std::int64_t GateCounts::count(GateKind k) const {
    auto it = by_kind.find(k);
    return it == by_kind.end() ? 0 : it->second;
}

std::int64_t GateCounts::t_count() const {
    return count(GateKind::T) + count(GateKind::Tdg) + count(GateKind::RxPi4) +
           count(GateKind::RxPi4Dg);
}

std::int64_t GateCounts::clifford_count() const {
    return count(GateKind::H) + count(GateKind::S) + count(GateKind::Sdg) + count(GateKind::CX) +
           count(GateKind::X) + count(GateKind::Y) + count(GateKind::Z);
}

std::int64_t GateCounts::nontrivial_rz_count() const { return nontrivial_rz; }

std::int64_t GateCounts::total() const {
    std::int64_t n = 0;
    for (const auto& [k, v] : by_kind) n += v;
    return n;
}

bool angle_needs_synthesis(const Angle& a) { return !a.is_multiple_of_pi_4(); }

GateCounts gate_counts(const Circuit& c) {
    GateCounts gc;
    for (const auto& g : c.gates) {
        ++gc.by_kind[g.kind];
        switch (g.kind) {
            case GateKind::RZ:
            case GateKind::RX:
            case GateKind::RY:
                if (angle_needs_synthesis(g.params[0])) ++gc.nontrivial_rz;
                break;
            case GateKind::U3:
                for (const auto& p : g.params)
                    if (angle_needs_synthesis(p)) ++gc.nontrivial_rz;
                break;
            default:
                break;
        }
    }
    return gc;
}

std::int64_t rz_count(const Circuit& c) { return gate_counts(c).nontrivial_rz_count(); }

}  // namespace taco
