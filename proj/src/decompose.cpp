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

#include "taco/decompose.hpp"

namespace taco {

bool is_decomposed(const Circuit& c) {
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::MeasureZ || g.kind == GateKind::CX) continue;
        if (!is_single_qubit(g.kind)) return false;
    }
    return true;
}

Circuit decompose_to_cx_1q(const Circuit& c) {
    Circuit out(c.num_qubits, c.name);
    out.metadata = c.metadata;
    for (const auto& g : c.gates) {
        switch (g.kind) {
            case GateKind::CZ: {
                const auto a = g.qubits[0], t = g.qubits[1];
                out.gates.push_back(Gate::h(t));
                out.gates.push_back(Gate::cx(a, t));
                out.gates.push_back(Gate::h(t));
                break;
            }
            case GateKind::Swap: {
                const auto a = g.qubits[0], b = g.qubits[1];
                out.gates.push_back(Gate::cx(a, b));
                out.gates.push_back(Gate::cx(b, a));
                out.gates.push_back(Gate::cx(a, b));
                break;
            }
            case GateKind::CP: {
                // The RZ form keeps theta/2 snappable to Clifford/T angles
                // when theta is a dyadic multiple of pi.
                const auto ctl = g.qubits[0], tgt = g.qubits[1];
                const Angle half = g.params[0].halved();
                out.gates.push_back(Gate::rz(half, ctl));
                out.gates.push_back(Gate::cx(ctl, tgt));
                out.gates.push_back(Gate::rz(half.negated(), tgt));
                out.gates.push_back(Gate::cx(ctl, tgt));
                out.gates.push_back(Gate::rz(half, tgt));
                break;
            }
            case GateKind::CCX: {
                const auto a = g.qubits[0], b = g.qubits[1], t = g.qubits[2];
                out.gates.push_back(Gate::h(t));
                out.gates.push_back(Gate::cx(b, t));
                out.gates.push_back(Gate::tdg(t));
                out.gates.push_back(Gate::cx(a, t));
                out.gates.push_back(Gate::t(t));
                out.gates.push_back(Gate::cx(b, t));
                out.gates.push_back(Gate::tdg(t));
                out.gates.push_back(Gate::cx(a, t));
                out.gates.push_back(Gate::t(b));
                out.gates.push_back(Gate::t(t));
                out.gates.push_back(Gate::h(t));
                out.gates.push_back(Gate::cx(a, b));
                out.gates.push_back(Gate::t(a));
                out.gates.push_back(Gate::tdg(b));
                out.gates.push_back(Gate::cx(a, b));
                break;
            }
            default:
                out.gates.push_back(g);
                break;
        }
    }
    return out;
}

}  // namespace taco
