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

#include "taco/unitary2.hpp"

#include <cmath>
#include <stdexcept>

namespace taco {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const cplx kI(0.0, 1.0);
}  // namespace

Unitary2 Unitary2::checked(const std::array<cplx, 4>& entries) {
    Unitary2 u;
    u.e = entries;
    if (u.deviation_from_unitary() > 1e-12)
        throw std::invalid_argument("matrix is not unitary within 1e-12");
    return u;
}

Unitary2 Unitary2::times(const Unitary2& rhs) const {
    Unitary2 r;
    r.e[0] = e[0] * rhs.e[0] + e[1] * rhs.e[2];
    r.e[1] = e[0] * rhs.e[1] + e[1] * rhs.e[3];
    r.e[2] = e[2] * rhs.e[0] + e[3] * rhs.e[2];
    r.e[3] = e[2] * rhs.e[1] + e[3] * rhs.e[3];
    return r;
}

Unitary2 Unitary2::adjoint() const {
    Unitary2 r;
    r.e[0] = std::conj(e[0]);
    r.e[1] = std::conj(e[2]);
    r.e[2] = std::conj(e[1]);
    r.e[3] = std::conj(e[3]);
    return r;
}

double Unitary2::deviation_from_unitary() const {
    const Unitary2 p = adjoint().times(*this);
    double dev = 0.0;
    dev = std::max(dev, std::abs(p.e[0] - cplx(1, 0)));
    dev = std::max(dev, std::abs(p.e[1]));
    dev = std::max(dev, std::abs(p.e[2]));
    dev = std::max(dev, std::abs(p.e[3] - cplx(1, 0)));
    return dev;
}

Unitary2 rz_matrix(double theta) {
    Unitary2 u;
    u.e = {std::exp(-kI * (theta / 2.0)), 0.0, 0.0, std::exp(kI * (theta / 2.0))};
    return u;
}

Unitary2 rx_matrix(double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    Unitary2 u;
    u.e = {cplx(c, 0), -kI * s, -kI * s, cplx(c, 0)};
    return u;
}

Unitary2 ry_matrix(double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    Unitary2 u;
    u.e = {cplx(c, 0), cplx(-s, 0), cplx(s, 0), cplx(c, 0)};
    return u;
}

Unitary2 gate_matrix(const Gate& g) {
    Unitary2 u;
    switch (g.kind) {
        case GateKind::X: u.e = {0, 1, 1, 0}; return u;
        case GateKind::Y: u.e = {0, -kI, kI, 0}; return u;
        case GateKind::Z: u.e = {1, 0, 0, -1}; return u;
        case GateKind::H: u.e = {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}; return u;
        case GateKind::S: u.e = {1, 0, 0, kI}; return u;
        case GateKind::Sdg: u.e = {1, 0, 0, -kI}; return u;
        case GateKind::T: u.e = {1, 0, 0, std::exp(kI * (M_PI / 4))}; return u;
        case GateKind::Tdg: u.e = {1, 0, 0, std::exp(-kI * (M_PI / 4))}; return u;
        case GateKind::RZ: return rz_matrix(g.params[0].radians());
        case GateKind::RX: return rx_matrix(g.params[0].radians());
        case GateKind::RY: return ry_matrix(g.params[0].radians());
        case GateKind::RxPi4: return rx_matrix(M_PI / 4);
        case GateKind::RxPi4Dg: return rx_matrix(-M_PI / 4);
        case GateKind::U3: {
            // u3(theta, phi, lambda) per the OpenQASM convention.
            const double th = g.params[0].radians();
            const double ph = g.params[1].radians();
            const double la = g.params[2].radians();
            const double c = std::cos(th / 2.0), s = std::sin(th / 2.0);
            u.e = {cplx(c, 0), -std::exp(kI * la) * s, std::exp(kI * ph) * s,
                   std::exp(kI * (ph + la)) * c};
            return u;
        }
        default:
            throw std::invalid_argument(std::string("gate_matrix: not single-qubit: ") +
                                        gate_name(g.kind));
    }
}

Unitary2 matrix_of_sequence(const std::vector<Gate>& gates) {
    Unitary2 u;
    for (const auto& g : gates) u = gate_matrix(g).times(u);
    return u;
}

double projective_distance(const Unitary2& a, const Unitary2& b) {
    const Unitary2 p = a.adjoint().times(b);
    const double t = std::abs(p.e[0] + p.e[3]) / 2.0;
    return std::sqrt(std::max(0.0, 1.0 - t));
}

}  // namespace taco
