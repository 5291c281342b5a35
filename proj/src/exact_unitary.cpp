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

#include "taco/exact_unitary.hpp"

#include <stdexcept>
#include <tuple>

namespace taco {

namespace {
std::tuple<int, std::int64_t, std::int64_t, std::int64_t, std::int64_t> entry_key(const RingElt& r) {
    return {r.k(), r.a(), r.b(), r.c(), r.d()};
}

bool lex_less(const ExactUnitary& x, const ExactUnitary& y) {
    for (int i = 0; i < 4; ++i) {
        const auto kx = entry_key(x.e[i]);
        const auto ky = entry_key(y.e[i]);
        if (kx != ky) return kx < ky;
    }
    return false;
}
}  // namespace

ExactUnitary ExactUnitary::identity() {
    ExactUnitary u;
    u.e[0] = RingElt::one();
    u.e[3] = RingElt::one();
    return u;
}

ExactUnitary ExactUnitary::of_kind(GateKind kind) {
    ExactUnitary u;
    const RingElt zero = RingElt::zero();
    const RingElt one = RingElt::one();
    switch (kind) {
        case GateKind::H: {
            const RingElt h = RingElt::inv_sqrt2(1);
            u.e[0] = h;
            u.e[1] = h;
            u.e[2] = h;
            u.e[3] = -h;
            return u;
        }
        case GateKind::S:
            u.e[0] = one;
            u.e[3] = RingElt::omega(2);
            return u;
        case GateKind::Sdg:
            u.e[0] = one;
            u.e[3] = RingElt::omega(6);
            return u;
        case GateKind::T:
            u.e[0] = one;
            u.e[3] = RingElt::omega(1);
            return u;
        case GateKind::Tdg:
            u.e[0] = one;
            u.e[3] = RingElt::omega(7);
            return u;
        case GateKind::X:
            u.e[1] = one;
            u.e[2] = one;
            return u;
        case GateKind::Y:
            u.e[1] = RingElt::omega(6);  // -i
            u.e[2] = RingElt::omega(2);  // i
            return u;
        case GateKind::Z:
            u.e[0] = one;
            u.e[3] = -one;
            return u;
        case GateKind::RxPi4:
            return of_kind(GateKind::H).times(of_kind(GateKind::T)).times(of_kind(GateKind::H));
        case GateKind::RxPi4Dg:
            return of_kind(GateKind::H).times(of_kind(GateKind::Tdg)).times(of_kind(GateKind::H));
        default:
            throw std::invalid_argument(std::string("of_kind: not an exact 1q generator: ") +
                                        gate_name(kind));
    }
    (void)zero;
}

ExactUnitary ExactUnitary::times(const ExactUnitary& rhs) const {
    ExactUnitary r;
    r.e[0] = e[0] * rhs.e[0] + e[1] * rhs.e[2];
    r.e[1] = e[0] * rhs.e[1] + e[1] * rhs.e[3];
    r.e[2] = e[2] * rhs.e[0] + e[3] * rhs.e[2];
    r.e[3] = e[2] * rhs.e[1] + e[3] * rhs.e[3];
    return r;
}

ExactUnitary ExactUnitary::adjoint() const {
    ExactUnitary r;
    r.e[0] = e[0].conj();
    r.e[1] = e[2].conj();
    r.e[2] = e[1].conj();
    r.e[3] = e[3].conj();
    return r;
}

ExactUnitary ExactUnitary::times_omega(int power) const {
    ExactUnitary r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i].times_omega(power);
    return r;
}

int ExactUnitary::sde() const {
    int k = 0;
    for (const auto& x : e) k = std::max(k, x.k());
    return k;
}

bool ExactUnitary::exactly_unitary() const {
    const ExactUnitary p = adjoint().times(*this);
    return p.e[0] == RingElt::one() && p.e[1].is_zero() && p.e[2].is_zero() &&
           p.e[3] == RingElt::one();
}

bool ExactUnitary::projectively_equal(const ExactUnitary& rhs) const {
    for (int m = 0; m < 8; ++m)
        if (*this == rhs.times_omega(m)) return true;
    return false;
}

ExactUnitary ExactUnitary::canonical() const {
    ExactUnitary best = *this;
    for (int m = 1; m < 8; ++m) {
        const ExactUnitary cand = times_omega(m);
        if (lex_less(cand, best)) best = cand;
    }
    return best;
}

Unitary2 ExactUnitary::to_unitary2() const {
    Unitary2 u;
    for (int i = 0; i < 4; ++i) u.e[i] = e[i].to_complex();
    return u;
}

bool ExactUnitary::operator==(const ExactUnitary& rhs) const {
    for (int i = 0; i < 4; ++i)
        if (e[i] != rhs.e[i]) return false;
    return true;
}

std::size_t ExactUnitaryHash::operator()(const ExactUnitary& u) const {
    RingEltHash h;
    std::size_t acc = 0xcbf29ce484222325ull;
    for (int i = 0; i < 4; ++i) acc = acc * 1099511628211ull + h(u.e[i]);
    return acc;
}

ExactUnitary exact_unitary_of(const std::vector<Gate>& gates) {
    ExactUnitary u = ExactUnitary::identity();
    for (const auto& g : gates) u = ExactUnitary::of_kind(g.kind).times(u);
    return u;
}

ExactUnitary exact_unitary_of_kinds(const std::vector<GateKind>& kinds_matrix_order) {
    ExactUnitary u = ExactUnitary::identity();
    for (const auto k : kinds_matrix_order) u = u.times(ExactUnitary::of_kind(k));
    return u;
}

}  // namespace taco
