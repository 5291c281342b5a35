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

#include <vector>

#include "taco/circuit.hpp"
#include "taco/clifford.hpp"
#include "taco/ma_form.hpp"

namespace taco {

/// Letters of the intermediate words between the elimination passes.
/// Words are stored in matrix order (leftmost applied last), mirroring
/// the MA regex; the boundary S — the one S an initial SHT syllable can
/// leave behind — is kept as a flag rather than a letter.
enum class RunLetter : std::uint8_t { H, T, Tdg, Z, X, RxPi4, RxPi4Dg };

struct LetterWord {
    std::vector<RunLetter> letters;  // matrix order
    bool boundary_s = false;
    CliffordClass terminal;

    ExactUnitary to_exact() const;
};

/// Body of pi/4 rotations left after full reduction, plus the deferred
/// terminal Clifford (applied before the body) and the optional boundary
/// S (applied after it).
struct RotationWord {
    std::vector<GateKind> body;  // application order; pi/4 rotation kinds only
    bool boundary_s = false;
    CliffordClass terminal;

    ExactUnitary to_exact() const;
    /// Gates in application order: terminal Clifford word, body, S.
    std::vector<Gate> to_gates(std::uint32_t qubit) const;
};

/// Rewrites every matrix-adjacent T*S pair as Tdg*Z. Only the boundary
/// exception (a leading SHT with no preceding T) survives, as a flag.
LetterWord eliminate_s(const MAWord& w);

/// Pushes every Pauli letter rightward (toward the terminal Clifford,
/// flipping T/Tdg on the way past X) and merges it into the terminal.
LetterWord commute_paulis(const LetterWord& w);

/// Commutes every H rightward, turning T/Tdg into X-axis pi/4 rotations;
/// an odd residual H multiplies into the terminal Clifford.
RotationWord eliminate_h(const LetterWord& w);

/// The composition of the three passes. Exact projective identity with
/// the input; the body length equals the MA word's T-count.
RotationWord reduce_run(const MAWord& w);

/// Deferred Pauli corrections, one letter per qubit. Signs are tracked
/// through composition and CX conjugation; they are phase-convention
/// data only (all downstream checks are projective).
struct PauliFrame {
    explicit PauliFrame(std::uint32_t n = 0) : x_(n, 0), z_(n, 0) {}

    std::uint32_t num_qubits() const { return static_cast<std::uint32_t>(x_.size()); }
    PauliLetter letter(std::uint32_t q) const;
    bool is_identity() const;
    /// The frame operator is i^phase_mod4 * prod_q X^x Z^z (a qubit whose
    /// letter reads Y carries its XZ form here). Phase-convention data
    /// only; every downstream equivalence check is projective.
    int phase_mod4() const { return phase_mod4_; }
    bool sign() const { return phase_mod4_ == 0; }

    /// Composes P onto the frame on qubit q (frame becomes F * P, the new
    /// Pauli applied first).
    void compose_before(std::uint32_t q, PauliLetter p);
    /// Conjugates the frame by CX(control, target).
    void conjugate_cx(std::uint32_t control, std::uint32_t target);
    /// Discharges qubit q at a Z measurement; returns true when the
    /// recorded outcome must flip (X or Y letter pending).
    bool discharge_at_measure(std::uint32_t q);

    std::string to_string() const;

  private:
    std::vector<std::uint8_t> x_, z_;
    int phase_mod4_ = 0;  // global power of i from letter products
};

struct ReduceResult {
    Circuit circuit;
    PauliFrame frame;
    /// One entry per MeasureZ gate, in order: outcome flip flags.
    std::vector<bool> measurement_flips;
    // Bookkeeping for the reduction report.
    std::int64_t reemitted_h = 0;
    std::int64_t reemitted_s = 0;
    std::int64_t boundary_s = 0;
};

/// Reduces every single-qubit run of a Clifford+T circuit: MA-normalize,
/// eliminate S/Pauli/H, emit the non-Pauli remainder as gates and push
/// the Pauli part into the frame (through later CX gates, discharging at
/// measurements).
ReduceResult reduce_circuit(const Circuit& c);

struct ReductionStats {
    std::int64_t h_before = 0, h_after = 0;
    std::int64_t s_before = 0, s_after = 0;
    std::int64_t clifford_before = 0, clifford_after = 0;  // H + S + Sdg
    double h_reduction = 0.0, s_reduction = 0.0, clifford_reduction = 0.0;
    // Variant ignoring the re-emitted terminal Cliffords and boundary S.
    double h_reduction_excl_reemitted = 0.0;
    double s_reduction_excl_reemitted = 0.0;
    double clifford_reduction_excl_reemitted = 0.0;
};

/// Percentage reductions 1 - after/before per kind (H; S+Sdg; their
/// total). CX and virtual Paulis are excluded on both sides. When the
/// re-emission counts of a ReduceResult are supplied, the *_excl_*
/// variants discount them.
ReductionStats clifford_reduction_stats(const Circuit& before, const Circuit& after,
                                        const ReduceResult* detail = nullptr);

/// Fraction of pi/4 rotations lying in maximal same-qubit rotation runs
/// of length >= min_run.
double rotation_locality(const Circuit& c, std::size_t min_run = 10);

}  // namespace taco
