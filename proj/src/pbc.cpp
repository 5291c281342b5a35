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

#include "taco/pbc.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace taco {

std::vector<std::uint32_t> PauliString::support() const {
    std::vector<std::uint32_t> s;
    for (std::uint32_t q = 0; q < num_qubits(); ++q)
        if (letters[q] != PauliLetter::I) s.push_back(q);
    return s;
}

std::string PauliString::to_string() const {
    std::string s = negative ? "-" : "+";
    for (const auto l : letters) s += pauli_char(l);
    return s;
}

CliffordTableau::CliffordTableau(std::uint32_t n) : n_(n), words_((n + 63) / 64) {
    xrow_.resize(n);
    zrow_.resize(n);
    for (std::uint32_t q = 0; q < n; ++q) {
        xrow_[q].x.assign(words_, 0);
        xrow_[q].z.assign(words_, 0);
        zrow_[q].x.assign(words_, 0);
        zrow_[q].z.assign(words_, 0);
        xrow_[q].x[q / 64] |= std::uint64_t{1} << (q % 64);
        zrow_[q].z[q / 64] |= std::uint64_t{1} << (q % 64);
    }
}

void CliffordTableau::row_mult(Row& acc, const Row& other) {
    // i^p1 XZ... * i^p2 XZ...: reordering Z-bits of acc past X-bits of
    // other flips signs per crossing.
    int crossings = 0;
    for (std::size_t w = 0; w < words_; ++w)
        crossings += std::popcount(acc.z[w] & other.x[w]);
    acc.phase = (acc.phase + other.phase + 2 * (crossings & 1)) % 4;
    for (std::size_t w = 0; w < words_; ++w) {
        acc.x[w] ^= other.x[w];
        acc.z[w] ^= other.z[w];
    }
}

void CliffordTableau::append_h(std::uint32_t q) { std::swap(xrow_[q], zrow_[q]); }

void CliffordTableau::append_s(std::uint32_t q, bool dagger) {
    // Appending S: X-row picks up -i * Xrow*Zrow (S^dag X S = -Y);
    // appending Sdg: +i (S X S^dag = Y). Z-row is untouched.
    Row& r = xrow_[q];
    r.phase = (r.phase + (dagger ? 1 : 3)) % 4;
    row_mult(r, zrow_[q]);
}

void CliffordTableau::append_cx(std::uint32_t c, std::uint32_t t) {
    row_mult(xrow_[c], xrow_[t]);
    row_mult(zrow_[t], zrow_[c]);
}

void CliffordTableau::append_pauli(GateKind k, std::uint32_t q) {
    if (k == GateKind::Z || k == GateKind::Y) xrow_[q].phase = (xrow_[q].phase + 2) % 4;
    if (k == GateKind::X || k == GateKind::Y) zrow_[q].phase = (zrow_[q].phase + 2) % 4;
}

void CliffordTableau::append(const Gate& g) {
    switch (g.kind) {
        case GateKind::H: append_h(g.qubits[0]); return;
        case GateKind::S: append_s(g.qubits[0], false); return;
        case GateKind::Sdg: append_s(g.qubits[0], true); return;
        case GateKind::CX: append_cx(g.qubits[0], g.qubits[1]); return;
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z: append_pauli(g.kind, g.qubits[0]); return;
        default:
            throw std::invalid_argument(std::string("CliffordTableau: not a Clifford gate: ") +
                                        gate_name(g.kind));
    }
}

PauliString CliffordTableau::row_to_string(const Row& r) const {
    PauliString p(n_);
    int ys = 0;
    for (std::uint32_t q = 0; q < n_; ++q) {
        const bool x = (r.x[q / 64] >> (q % 64)) & 1;
        const bool z = (r.z[q / 64] >> (q % 64)) & 1;
        if (x && z) {
            p.letters[q] = PauliLetter::Y;
            ++ys;
        } else if (x) {
            p.letters[q] = PauliLetter::X;
        } else if (z) {
            p.letters[q] = PauliLetter::Z;
        }
    }
    const int scalar = ((r.phase - ys) % 4 + 4) % 4;  // i-power after Y absorption
    if (scalar & 1) throw std::logic_error("tableau row has imaginary scalar");
    p.negative = scalar == 2;
    return p;
}

PauliString CliffordTableau::image_of_z(std::uint32_t q) const { return row_to_string(zrow_[q]); }
PauliString CliffordTableau::image_of_x(std::uint32_t q) const { return row_to_string(xrow_[q]); }

bool CliffordTableau::check_symplectic() const {
    auto anticommute = [&](const Row& a, const Row& b) {
        int n = 0;
        for (std::size_t w = 0; w < words_; ++w)
            n += std::popcount(a.x[w] & b.z[w]) + std::popcount(a.z[w] & b.x[w]);
        return (n & 1) == 1;
    };
    for (std::uint32_t i = 0; i < n_; ++i) {
        for (std::uint32_t j = 0; j < n_; ++j) {
            if (anticommute(xrow_[i], xrow_[j])) return false;
            if (anticommute(zrow_[i], zrow_[j])) return false;
            if (anticommute(xrow_[i], zrow_[j]) != (i == j)) return false;
        }
    }
    return true;
}

PbcProgram to_pbc(const Circuit& c) {
    PbcProgram prog;
    CliffordTableau tab(c.num_qubits);
    for (const auto& g : c.gates) {
        if (g.kind == GateKind::T || g.kind == GateKind::Tdg) {
            PauliString p = tab.image_of_z(g.qubits[0]);
            PauliRotation rot;
            rot.negative = p.negative != (g.kind == GateKind::Tdg);
            p.negative = false;
            rot.pauli = std::move(p);
            prog.rotations.push_back(std::move(rot));
            continue;
        }
        if (g.kind == GateKind::MeasureZ) {
            prog.measurements.push_back(tab.image_of_z(g.qubits[0]));
            continue;
        }
        tab.append(g);  // rejects non-Clifford kinds
    }
    return prog;
}

std::vector<std::vector<std::size_t>> parallelism_layers(
    const std::vector<std::vector<std::uint32_t>>& supports) {
    std::vector<std::vector<std::size_t>> layers;
    std::vector<std::int64_t> last_layer;  // per qubit, -1 when untouched
    for (std::size_t i = 0; i < supports.size(); ++i) {
        if (supports[i].empty()) throw std::invalid_argument("parallelism_layers: empty support");
        std::int64_t layer = 0;
        for (const auto q : supports[i]) {
            if (q >= last_layer.size()) last_layer.resize(q + 1, -1);
            layer = std::max(layer, last_layer[q] + 1);
        }
        if (static_cast<std::size_t>(layer) >= layers.size()) layers.resize(layer + 1);
        layers[layer].push_back(i);
        for (const auto q : supports[i]) last_layer[q] = layer;
    }
    return layers;
}

namespace {
double quantile(const std::vector<std::int64_t>& sorted, double p) {
    if (sorted.empty()) return 0.0;
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return static_cast<double>(sorted[lo]) * (1.0 - frac) + static_cast<double>(sorted[hi]) * frac;
}
}  // namespace

ParallelismStats parallelism_stats(const std::vector<std::vector<std::size_t>>& layers) {
    ParallelismStats st;
    st.layers = static_cast<std::int64_t>(layers.size());
    for (const auto& l : layers) {
        st.layer_sizes.push_back(static_cast<std::int64_t>(l.size()));
        st.items += static_cast<std::int64_t>(l.size());
        st.max = std::max(st.max, static_cast<std::int64_t>(l.size()));
    }
    std::vector<std::int64_t> sorted = st.layer_sizes;
    std::sort(sorted.begin(), sorted.end());
    st.median = quantile(sorted, 0.5);
    st.q1 = quantile(sorted, 0.25);
    st.q3 = quantile(sorted, 0.75);
    return st;
}

std::vector<std::vector<std::uint32_t>> gate_supports(const Circuit& c) {
    std::vector<std::vector<std::uint32_t>> s;
    s.reserve(c.gates.size());
    for (const auto& g : c.gates) s.push_back(g.qubits);
    return s;
}

}  // namespace taco
