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

#include "taco/reduce.hpp"

#include <stdexcept>

#include "taco/transform.hpp"

namespace taco {

namespace {

GateKind letter_kind(RunLetter l) {
    switch (l) {
        case RunLetter::H: return GateKind::H;
        case RunLetter::T: return GateKind::T;
        case RunLetter::Tdg: return GateKind::Tdg;
        case RunLetter::Z: return GateKind::Z;
        case RunLetter::X: return GateKind::X;
        case RunLetter::RxPi4: return GateKind::RxPi4;
        case RunLetter::RxPi4Dg: return GateKind::RxPi4Dg;
    }
    throw std::logic_error("letter_kind");
}

GateKind flip_rotation(GateKind k) {
    switch (k) {
        case GateKind::T: return GateKind::Tdg;
        case GateKind::Tdg: return GateKind::T;
        case GateKind::RxPi4: return GateKind::RxPi4Dg;
        case GateKind::RxPi4Dg: return GateKind::RxPi4;
        default: throw std::logic_error("flip_rotation: not a pi/4 rotation");
    }
}

bool rotation_axis_is_z(GateKind k) { return k == GateKind::T || k == GateKind::Tdg; }

ExactUnitary exact_with_boundary(const std::vector<RunLetter>& letters, bool boundary_s,
                                 const CliffordClass& terminal) {
    ExactUnitary u = ExactUnitary::identity();
    if (boundary_s) u = u.times(ExactUnitary::of_kind(GateKind::S));
    for (const auto l : letters) u = u.times(ExactUnitary::of_kind(letter_kind(l)));
    return u.times(terminal.exact());
}

}  // namespace

ExactUnitary LetterWord::to_exact() const {
    return exact_with_boundary(letters, boundary_s, terminal);
}

ExactUnitary RotationWord::to_exact() const {
    ExactUnitary u = ExactUnitary::identity();
    if (boundary_s) u = u.times(ExactUnitary::of_kind(GateKind::S));
    // Body is stored in application order; matrix order is its reverse.
    for (auto it = body.rbegin(); it != body.rend(); ++it)
        u = u.times(ExactUnitary::of_kind(*it));
    return u.times(terminal.exact());
}

std::vector<Gate> RotationWord::to_gates(std::uint32_t qubit) const {
    std::vector<Gate> gates;
    auto word = terminal.canonical_word();  // matrix order; reverse to apply
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        gates.emplace_back(*it, std::vector<std::uint32_t>{qubit});
    for (const auto k : body) gates.emplace_back(k, std::vector<std::uint32_t>{qubit});
    if (boundary_s) gates.push_back(Gate::s(qubit));
    return gates;
}

LetterWord eliminate_s(const MAWord& w) {
    // Expand to letters, marking each syllable start.
    LetterWord out;
    out.terminal = w.terminal;
    std::vector<RunLetter> letters;
    if (w.leading_t) letters.push_back(RunLetter::T);
    std::vector<bool> is_s(letters.size(), false);
    for (const auto s : w.syllables) {
        if (s == Syllable::SHT) {
            letters.push_back(RunLetter::Z);  // placeholder, patched below
            is_s.push_back(true);
        }
        letters.push_back(RunLetter::H);
        is_s.push_back(false);
        letters.push_back(RunLetter::T);
        is_s.push_back(false);
    }
    // Each S is preceded (matrix-adjacent) by the previous syllable's T,
    // except at the very front: T S -> Tdg Z. An initial S survives as
    // the boundary flag.
    std::vector<RunLetter> rewritten;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (!is_s[i]) {
            rewritten.push_back(letters[i]);
            continue;
        }
        if (rewritten.empty()) {
            out.boundary_s = true;
            continue;
        }
        if (rewritten.back() == RunLetter::T) {
            rewritten.back() = RunLetter::Tdg;
            rewritten.push_back(RunLetter::Z);
        } else if (rewritten.back() == RunLetter::Tdg) {
            // Tdg S = T (exact phase identity), no Pauli residue.
            rewritten.back() = RunLetter::T;
        } else {
            throw std::logic_error("eliminate_s: S not preceded by T");
        }
    }
    out.letters = std::move(rewritten);
    return out;
}

LetterWord commute_paulis(const LetterWord& w) {
    LetterWord out;
    out.boundary_s = w.boundary_s;
    // Carry the pending Pauli rightward as (x, z) bits; H swaps them,
    // T-likes flip under x. Merge the remainder into the terminal from
    // the left.
    bool px = false, pz = false;
    for (const auto l : w.letters) {
        switch (l) {
            case RunLetter::Z:
                pz = !pz;
                break;
            case RunLetter::X:
                px = !px;
                break;
            case RunLetter::H: {
                std::swap(px, pz);
                out.letters.push_back(RunLetter::H);
                break;
            }
            case RunLetter::T:
                out.letters.push_back(px ? RunLetter::Tdg : RunLetter::T);
                break;
            case RunLetter::Tdg:
                out.letters.push_back(px ? RunLetter::T : RunLetter::Tdg);
                break;
            default:
                throw std::logic_error("commute_paulis: unexpected letter");
        }
    }
    CliffordClass pauli = CliffordClass::identity();
    if (px && pz)
        pauli = CliffordClass::of_kind(GateKind::Y);
    else if (px)
        pauli = CliffordClass::of_kind(GateKind::X);
    else if (pz)
        pauli = CliffordClass::of_kind(GateKind::Z);
    out.terminal = pauli.times(w.terminal);
    return out;
}

RotationWord eliminate_h(const LetterWord& w) {
    RotationWord out;
    out.boundary_s = w.boundary_s;
    std::vector<GateKind> body_matrix;  // matrix order while sweeping
    bool pending_h = false;
    for (const auto l : w.letters) {
        switch (l) {
            case RunLetter::H:
                pending_h = !pending_h;
                break;
            case RunLetter::T:
                body_matrix.push_back(pending_h ? GateKind::RxPi4 : GateKind::T);
                break;
            case RunLetter::Tdg:
                body_matrix.push_back(pending_h ? GateKind::RxPi4Dg : GateKind::Tdg);
                break;
            default:
                throw std::logic_error("eliminate_h: unexpected letter (run commute_paulis first)");
        }
    }
    out.terminal = pending_h ? CliffordClass::of_kind(GateKind::H).times(w.terminal) : w.terminal;
    out.body.assign(body_matrix.rbegin(), body_matrix.rend());
    return out;
}

RotationWord reduce_run(const MAWord& w) { return eliminate_h(commute_paulis(eliminate_s(w))); }

PauliLetter PauliFrame::letter(std::uint32_t q) const {
    const int bits = (x_[q] ? 1 : 0) | (z_[q] ? 2 : 0);
    switch (bits) {
        case 0: return PauliLetter::I;
        case 1: return PauliLetter::X;
        case 2: return PauliLetter::Z;
        default: return PauliLetter::Y;
    }
}

bool PauliFrame::is_identity() const {
    for (std::size_t q = 0; q < x_.size(); ++q)
        if (x_[q] || z_[q]) return false;
    return true;
}

void PauliFrame::compose_before(std::uint32_t q, PauliLetter p) {
    // The frame operator is i^phase * prod X^x Z^z. Right-multiplying by
    // P = i^(p==Y) X^px Z^pz reorders Z^z X^px at a (-1)^(z*px) cost.
    const bool px = p == PauliLetter::X || p == PauliLetter::Y;
    const bool pz = p == PauliLetter::Z || p == PauliLetter::Y;
    if (p == PauliLetter::Y) phase_mod4_ = (phase_mod4_ + 1) % 4;
    if (z_[q] && px) phase_mod4_ = (phase_mod4_ + 2) % 4;
    x_[q] ^= px ? 1 : 0;
    z_[q] ^= pz ? 1 : 0;
}

void PauliFrame::conjugate_cx(std::uint32_t control, std::uint32_t target) {
    // CX conjugation on symplectic bits; the sign rule is the standard
    // stabilizer-tableau one.
    const bool xa = x_[control], za = z_[control];
    const bool xb = x_[target], zb = z_[target];
    if (xa && zb && (xb == za)) phase_mod4_ = (phase_mod4_ + 2) % 4;
    x_[target] = xb ^ xa;
    z_[control] = za ^ zb;
}

bool PauliFrame::discharge_at_measure(std::uint32_t q) {
    const bool flips = x_[q] != 0;
    x_[q] = 0;
    z_[q] = 0;
    return flips;
}

std::string PauliFrame::to_string() const {
    std::string s;
    for (std::uint32_t q = 0; q < num_qubits(); ++q) s += pauli_char(letter(q));
    return s;
}

namespace {

// Pull the Pauli part of the reduced run out to the applied-last side:
// word (matrix order) is S? body A P with P applied first. Moving P left
// conjugates it through A and S and flips body rotations whose axis
// anticommutes with it.
struct SplitRun {
    std::vector<GateKind> nonpauli;  // matrix order
    std::vector<GateKind> body;      // application order
    bool boundary_s;
    PauliLetter pushed;
};

SplitRun split_run(const RotationWord& rw) {
    SplitRun sr;
    sr.boundary_s = rw.boundary_s;
    sr.nonpauli = rw.terminal.nonpauli_word();
    PauliLetter p = rw.terminal.pauli_part();

    if (p != PauliLetter::I) {
        // Through the non-Pauli representative A: P -> A P A^dag.
        ExactUnitary rep = exact_unitary_of_kinds(sr.nonpauli);
        p = CliffordClass::from_exact(rep).conjugate_pauli(p);
    }
    sr.body = rw.body;
    if (p == PauliLetter::X || p == PauliLetter::Y) {
        for (auto& k : sr.body)
            if (rotation_axis_is_z(k)) k = flip_rotation(k);
    }
    if (p == PauliLetter::Z || p == PauliLetter::Y) {
        for (auto& k : sr.body)
            if (!rotation_axis_is_z(k)) k = flip_rotation(k);
    }
    if (sr.boundary_s && p != PauliLetter::I)
        p = CliffordClass::of_kind(GateKind::S).conjugate_pauli(p);
    sr.pushed = p;
    return sr;
}

}  // namespace

ReduceResult reduce_circuit(const Circuit& c) {
    for (const auto& g : c.gates)
        if (g.kind != GateKind::CX && g.kind != GateKind::MeasureZ && !is_clifford_t(g.kind))
            throw std::invalid_argument(std::string("reduce_circuit: not Clifford+T: ") +
                                        gate_name(g.kind));

    ReduceResult res;
    res.circuit = Circuit(c.num_qubits, c.name);
    res.circuit.metadata = c.metadata;
    res.frame = PauliFrame(c.num_qubits);

    const auto runs = segment_runs(c);
    std::vector<int> run_at(c.gates.size(), -1);
    for (std::size_t r = 0; r < runs.size(); ++r) run_at[runs[r].start()] = static_cast<int>(r);
    std::vector<bool> in_run(c.gates.size(), false);
    for (const auto& run : runs)
        for (auto pos : run.positions) in_run[pos] = true;

    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        if (g.kind == GateKind::CX) {
            res.frame.conjugate_cx(g.qubits[0], g.qubits[1]);
            res.circuit.gates.push_back(g);
            continue;
        }
        if (g.kind == GateKind::MeasureZ) {
            res.measurement_flips.push_back(res.frame.discharge_at_measure(g.qubits[0]));
            res.circuit.gates.push_back(g);
            continue;
        }
        if (!in_run[i] || run_at[i] < 0) continue;  // later gate of a run

        const SingleQubitRun& run = runs[run_at[i]];
        const std::uint32_t q = run.qubit;

        // Absorb the incoming frame letter: W ~ F (F W F) F, so reduce
        // the conjugated operator and keep F pending.
        ExactUnitary w = exact_unitary_of(run.gates);
        const PauliLetter fq = res.frame.letter(q);
        if (fq != PauliLetter::I) {
            const auto fu = ExactUnitary::of_kind(fq == PauliLetter::X   ? GateKind::X
                                                  : fq == PauliLetter::Y ? GateKind::Y
                                                                         : GateKind::Z);
            w = fu.times(w).times(fu);
        }

        const RotationWord reduced = reduce_run(ma_normalize(w));
        const SplitRun sr = split_run(reduced);

        for (auto it = sr.nonpauli.rbegin(); it != sr.nonpauli.rend(); ++it) {
            res.circuit.gates.emplace_back(*it, std::vector<std::uint32_t>{q});
            if (*it == GateKind::H) ++res.reemitted_h;
            if (*it == GateKind::S) ++res.reemitted_s;
        }
        for (const auto k : sr.body)
            res.circuit.gates.emplace_back(k, std::vector<std::uint32_t>{q});
        if (sr.boundary_s) {
            res.circuit.gates.push_back(Gate::s(q));
            ++res.boundary_s;
        }
        res.frame.compose_before(q, sr.pushed);
    }
    return res;
}

ReductionStats clifford_reduction_stats(const Circuit& before, const Circuit& after,
                                        const ReduceResult* detail) {
    const GateCounts cb = gate_counts(before);
    const GateCounts ca = gate_counts(after);
    ReductionStats st;
    st.h_before = cb.count(GateKind::H);
    st.h_after = ca.count(GateKind::H);
    st.s_before = cb.count(GateKind::S) + cb.count(GateKind::Sdg);
    st.s_after = ca.count(GateKind::S) + ca.count(GateKind::Sdg);
    st.clifford_before = st.h_before + st.s_before;
    st.clifford_after = st.h_after + st.s_after;
    auto pct = [](std::int64_t b, std::int64_t a) {
        if (b == 0) return a == 0 ? 0.0 : -1.0;
        return 1.0 - static_cast<double>(a) / static_cast<double>(b);
    };
    st.h_reduction = pct(st.h_before, st.h_after);
    st.s_reduction = pct(st.s_before, st.s_after);
    st.clifford_reduction = pct(st.clifford_before, st.clifford_after);
    if (detail) {
        const auto ha = st.h_after - detail->reemitted_h;
        const auto sa = st.s_after - detail->reemitted_s - detail->boundary_s;
        st.h_reduction_excl_reemitted = pct(st.h_before, ha);
        st.s_reduction_excl_reemitted = pct(st.s_before, sa);
        st.clifford_reduction_excl_reemitted = pct(st.clifford_before, ha + sa);
    } else {
        st.h_reduction_excl_reemitted = st.h_reduction;
        st.s_reduction_excl_reemitted = st.s_reduction;
        st.clifford_reduction_excl_reemitted = st.clifford_reduction;
    }
    return st;
}

double rotation_locality(const Circuit& c, std::size_t min_run) {
    std::vector<std::size_t> open(c.num_qubits, 0);
    std::int64_t total = 0, in_long = 0;
    auto close = [&](std::uint32_t q) {
        if (open[q] >= min_run) in_long += static_cast<std::int64_t>(open[q]);
        open[q] = 0;
    };
    for (const auto& g : c.gates) {
        if (is_pi4_rotation(g.kind)) {
            ++open[g.qubits[0]];
            ++total;
        } else {
            for (auto q : g.qubits) close(q);
        }
    }
    for (std::uint32_t q = 0; q < c.num_qubits; ++q) close(q);
    if (total == 0) return 1.0;
    return static_cast<double>(in_long) / static_cast<double>(total);
}

}  // namespace taco
