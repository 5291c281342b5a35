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

#include "taco/ma_form.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace taco {

namespace {

std::vector<GateKind> syllable_kinds(Syllable s) {
    if (s == Syllable::HT) return {GateKind::H, GateKind::T};
    return {GateKind::S, GateKind::H, GateKind::T};
}

// ---------------------------------------------------------------------
// Exact Bloch (SO(3)) representation. Entries are real ring elements
// (a + b*sqrt(2)) / sqrt(2)^k carried as RingElts of the shape
// (a, b, 0, -b). The descent runs here because each T syllable raises
// the SO(3) denominator exponent by exactly one, making the leftmost
// factor readable from a parity pattern.

struct So3 {
    RingElt m[9];  // row-major

    int common_k() const {
        int k = 0;
        for (const auto& e : m) k = std::max(k, e.k());
        return k;
    }

    So3 times(const So3& rhs) const {
        So3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[3 * i + j] = m[3 * i] * rhs.m[j] + m[3 * i + 1] * rhs.m[3 + j] +
                                 m[3 * i + 2] * rhs.m[6 + j];
        return r;
    }

    bool operator==(const So3& rhs) const {
        for (int i = 0; i < 9; ++i)
            if (m[i] != rhs.m[i]) return false;
        return true;
    }

    // Count of odd integer parts per row, at the matrix-wide common
    // denominator exponent (entries below it scale to even).
    std::array<int, 3> parity_vec() const {
        const int k = common_k();
        std::array<int, 3> v{0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const RingElt& e = m[3 * i + j];
                if (e.k() == k && (e.a() & 1)) ++v[i];
            }
        return v;
    }
};

So3 bloch_of(const ExactUnitary& u) {
    const ExactUnitary pauli[3] = {ExactUnitary::of_kind(GateKind::X),
                                   ExactUnitary::of_kind(GateKind::Y),
                                   ExactUnitary::of_kind(GateKind::Z)};
    const ExactUnitary ud = u.adjoint();
    const RingElt half = RingElt::inv_sqrt2(2);
    So3 r;
    for (int i = 0; i < 3; ++i) {
        const ExactUnitary su = pauli[i].times(u);
        for (int j = 0; j < 3; ++j) {
            const ExactUnitary a = su.times(pauli[j]).times(ud);
            const RingElt tr = (a.e[0] + a.e[3]) * half;
            if (tr != tr.conj()) throw std::logic_error("bloch_of: non-real entry");
            r.m[3 * i + j] = tr;
        }
    }
    return r;
}

// Descent data: the three peelable factors and the 24 Clifford targets.
struct DescentTable {
    So3 inv_t, inv_ht, inv_sht;
    So3 cliff[CliffordClass::kCount];
    DescentTable() {
        const auto H = ExactUnitary::of_kind(GateKind::H);
        const auto T = ExactUnitary::of_kind(GateKind::T);
        const auto S = ExactUnitary::of_kind(GateKind::S);
        inv_t = bloch_of(T.adjoint());
        inv_ht = bloch_of(H.times(T).adjoint());
        inv_sht = bloch_of(S.times(H).times(T).adjoint());
        for (int c = 0; c < CliffordClass::kCount; ++c)
            cliff[c] = bloch_of(CliffordClass::from_index(c).exact());
    }
};

const DescentTable& descent() {
    static const DescentTable t;
    return t;
}

}  // namespace

std::vector<GateKind> MAWord::kinds_matrix_order() const {
    std::vector<GateKind> kinds;
    if (leading_t) kinds.push_back(GateKind::T);
    for (const auto s : syllables) {
        const auto part = syllable_kinds(s);
        kinds.insert(kinds.end(), part.begin(), part.end());
    }
    const auto& cw = terminal.canonical_word();
    kinds.insert(kinds.end(), cw.begin(), cw.end());
    return kinds;
}

std::vector<Gate> MAWord::to_gates(std::uint32_t qubit) const {
    auto kinds = kinds_matrix_order();
    std::reverse(kinds.begin(), kinds.end());
    std::vector<Gate> gates;
    gates.reserve(kinds.size());
    for (const auto k : kinds) gates.emplace_back(k, std::vector<std::uint32_t>{qubit});
    return gates;
}

ExactUnitary MAWord::to_exact() const {
    ExactUnitary u = ExactUnitary::identity();
    if (leading_t) u = u.times(ExactUnitary::of_kind(GateKind::T));
    for (const auto s : syllables)
        for (const auto k : syllable_kinds(s)) u = u.times(ExactUnitary::of_kind(k));
    return u.times(terminal.exact());
}

std::string MAWord::to_letters() const {
    std::string out;
    if (leading_t) out += 'T';
    for (const auto s : syllables) out += s == Syllable::HT ? "HT" : "SHT";
    for (const auto k : terminal.canonical_word()) {
        switch (k) {
            case GateKind::H: out += 'H'; break;
            case GateKind::S: out += 'S'; break;
            case GateKind::X: out += 'X'; break;
            case GateKind::Z: out += "SS"; break;
            case GateKind::Y: out += "SSX"; break;
            default: throw std::logic_error("unexpected kind in Clifford word");
        }
    }
    if (out.empty()) out = "I";
    return out;
}

MAWord ma_normalize(const ExactUnitary& input) {
    const DescentTable& dt = descent();

    MAWord word;
    So3 r = bloch_of(input);
    bool first = true;
    // Each iteration peels the unique leftmost factor identified by the
    // parity pattern of the Bloch matrix: {2,2,0} an initial bare T,
    // {0,2,2} an HT syllable, {2,0,2} an SHT syllable, {1,1,1} done.
    for (std::size_t guard = 0;; ++guard) {
        if (guard > 100000) throw std::logic_error("ma_normalize: descent did not terminate");
        const auto pv = r.parity_vec();
        if (pv == std::array<int, 3>{1, 1, 1}) break;
        if (pv == std::array<int, 3>{2, 2, 0}) {
            if (!first) throw std::logic_error("ma_normalize: bare T mid-word");
            word.leading_t = true;
            r = dt.inv_t.times(r);
        } else if (pv == std::array<int, 3>{0, 2, 2}) {
            word.syllables.push_back(Syllable::HT);
            r = dt.inv_ht.times(r);
        } else if (pv == std::array<int, 3>{2, 0, 2}) {
            word.syllables.push_back(Syllable::SHT);
            r = dt.inv_sht.times(r);
        } else {
            throw std::invalid_argument(
                "ma_normalize: unexpected parity pattern (input not an exact Clifford+T "
                "unitary?)");
        }
        first = false;
    }
    if (r.common_k() != 0)
        throw std::logic_error("ma_normalize: residual Bloch matrix is not Clifford");
    for (int c = 0; c < CliffordClass::kCount; ++c) {
        if (r == dt.cliff[c]) {
            word.terminal = CliffordClass::from_index(c);
            return word;
        }
    }
    throw std::logic_error("ma_normalize: residual Clifford not found in table");
}

int bfs_min_tcount(const ExactUnitary& u, int bound) {
    const ExactUnitary target = u.canonical();
    for (int t = 0; t <= bound; ++t) {
        for (int a = 0; a < 2 && a <= t; ++a) {
            const int s = t - a;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << s); ++bits) {
                ExactUnitary body = ExactUnitary::identity();
                if (a) body = body.times(ExactUnitary::of_kind(GateKind::T));
                for (int i = 0; i < s; ++i) {
                    const Syllable syl = (bits >> i) & 1 ? Syllable::SHT : Syllable::HT;
                    for (const auto k : syllable_kinds(syl))
                        body = body.times(ExactUnitary::of_kind(k));
                }
                for (int c = 0; c < CliffordClass::kCount; ++c) {
                    if (body.times(CliffordClass::from_index(c).exact()).canonical() == target)
                        return t;
                }
            }
        }
    }
    throw std::runtime_error("bfs_min_tcount: bound exhausted");
}

}  // namespace taco
