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

#include "taco/verify.hpp"

#include <cmath>
#include <stdexcept>

#include "taco/reduce.hpp"

namespace taco {

DenseUnitary::DenseUnitary(int num_qubits) : n_(num_qubits) {
    if (n_ < 0 || n_ > kMaxQubits)
        throw std::invalid_argument("DenseUnitary: qubit count out of range");
    m_.assign(dim() * dim(), cplx(0, 0));
    for (std::size_t i = 0; i < dim(); ++i) at(i, i) = cplx(1, 0);
}

void DenseUnitary::apply_1q(const Unitary2& u, std::uint32_t q) {
    const std::size_t bit = std::size_t{1} << q;
    const std::size_t d = dim();
    for (std::size_t col = 0; col < d; ++col) {
        cplx* v = &m_[col * d];
        for (std::size_t i = 0; i < d; ++i) {
            if (i & bit) continue;
            const cplx a = v[i], b = v[i | bit];
            v[i] = u.e[0] * a + u.e[1] * b;
            v[i | bit] = u.e[2] * a + u.e[3] * b;
        }
    }
}

void DenseUnitary::apply_cx(std::uint32_t control, std::uint32_t target) {
    const std::size_t cb = std::size_t{1} << control;
    const std::size_t tb = std::size_t{1} << target;
    const std::size_t d = dim();
    for (std::size_t col = 0; col < d; ++col) {
        cplx* v = &m_[col * d];
        for (std::size_t i = 0; i < d; ++i)
            if ((i & cb) && !(i & tb)) std::swap(v[i], v[i | tb]);
    }
}

void DenseUnitary::apply_2q_phase(std::uint32_t a, std::uint32_t b, cplx phase) {
    const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    const std::size_t d = dim();
    for (std::size_t col = 0; col < d; ++col) {
        cplx* v = &m_[col * d];
        for (std::size_t i = 0; i < d; ++i)
            if ((i & mask) == mask) v[i] *= phase;
    }
}

void DenseUnitary::apply_swap(std::uint32_t a, std::uint32_t b) {
    const std::size_t ab = std::size_t{1} << a;
    const std::size_t bb = std::size_t{1} << b;
    const std::size_t d = dim();
    for (std::size_t col = 0; col < d; ++col) {
        cplx* v = &m_[col * d];
        for (std::size_t i = 0; i < d; ++i)
            if ((i & ab) && !(i & bb)) std::swap(v[i], v[(i & ~ab) | bb]);
    }
}

void DenseUnitary::apply(const Gate& g) {
    switch (g.kind) {
        case GateKind::CX:
            apply_cx(g.qubits[0], g.qubits[1]);
            return;
        case GateKind::CZ:
            apply_2q_phase(g.qubits[0], g.qubits[1], cplx(-1, 0));
            return;
        case GateKind::CP:
            apply_2q_phase(g.qubits[0], g.qubits[1],
                           std::exp(cplx(0, 1) * g.params[0].radians()));
            return;
        case GateKind::Swap:
            apply_swap(g.qubits[0], g.qubits[1]);
            return;
        case GateKind::CCX: {
            // Control-control-X: swap amplitude pairs where both controls set.
            const std::size_t c0 = std::size_t{1} << g.qubits[0];
            const std::size_t c1 = std::size_t{1} << g.qubits[1];
            const std::size_t tb = std::size_t{1} << g.qubits[2];
            const std::size_t d = dim();
            for (std::size_t col = 0; col < d; ++col) {
                cplx* v = &m_[col * d];
                for (std::size_t i = 0; i < d; ++i)
                    if ((i & c0) && (i & c1) && !(i & tb)) std::swap(v[i], v[i | tb]);
            }
            return;
        }
        case GateKind::MeasureZ:
            throw std::invalid_argument("unitary_of: circuit contains measurements");
        default:
            apply_1q(gate_matrix(g), g.qubits[0]);
            return;
    }
}

double DenseUnitary::deviation_from_unitary() const {
    const std::size_t d = dim();
    double dev = 0.0;
    // Columns of a unitary are orthonormal; checking the Gram matrix of a
    // few column pairs plus all norms keeps this O(d^2) instead of O(d^3).
    for (std::size_t c = 0; c < d; ++c) {
        cplx norm(0, 0);
        for (std::size_t r = 0; r < d; ++r) norm += std::conj((*this)(r, c)) * (*this)(r, c);
        dev = std::max(dev, std::abs(norm - cplx(1, 0)));
    }
    for (std::size_t c = 0; c + 1 < d; ++c) {
        cplx dot(0, 0);
        for (std::size_t r = 0; r < d; ++r) dot += std::conj((*this)(r, c)) * (*this)(r, c + 1);
        dev = std::max(dev, std::abs(dot));
    }
    return dev;
}

DenseUnitary unitary_of(const Circuit& c) {
    if (c.num_qubits > DenseUnitary::kMaxQubits)
        throw std::invalid_argument("unitary_of: circuit exceeds the 10-qubit oracle cap");
    DenseUnitary u(static_cast<int>(c.num_qubits));
    for (const auto& g : c.gates) u.apply(g);
    return u;
}

double phase_distance(const DenseUnitary& a, const DenseUnitary& b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("phase_distance: dimension mismatch");
    const std::size_t d = a.dim();
    cplx tr(0, 0);
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r) tr += std::conj(a(r, c)) * b(r, c);
    return 1.0 - std::abs(tr) / static_cast<double>(d);
}

bool equiv_up_to_phase(const DenseUnitary& a, const DenseUnitary& b, double tol) {
    return phase_distance(a, b) <= tol;
}

double phase_distance_mod_frame(const DenseUnitary& a, const DenseUnitary& b,
                                const PauliFrame& frame) {
    DenseUnitary fb = b;
    // Multiply by the frame operator from the left: one Pauli per qubit.
    for (std::uint32_t q = 0; q < static_cast<std::uint32_t>(b.num_qubits()); ++q) {
        switch (frame.letter(q)) {
            case PauliLetter::I:
                break;
            case PauliLetter::X:
                fb.apply(Gate::x(q));
                break;
            case PauliLetter::Y:
                fb.apply(Gate::y(q));
                break;
            case PauliLetter::Z:
                fb.apply(Gate::z(q));
                break;
        }
    }
    return phase_distance(a, fb);
}

bool equiv_mod_frame(const DenseUnitary& a, const DenseUnitary& b, const PauliFrame& frame,
                     double tol) {
    return phase_distance_mod_frame(a, b, frame) <= tol;
}

}  // namespace taco
