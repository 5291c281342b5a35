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
#include <string>
#include <vector>

#include "taco/circuit.hpp"
#include "taco/clifford.hpp"

namespace taco {

/// Signed Pauli string over n qubits.
struct PauliString {
    std::vector<PauliLetter> letters;
    bool negative = false;

    explicit PauliString(std::uint32_t n = 0) : letters(n, PauliLetter::I) {}

    std::uint32_t num_qubits() const { return static_cast<std::uint32_t>(letters.size()); }
    std::vector<std::uint32_t> support() const;
    std::string to_string() const;  // e.g. "-ZIXY"
};

/// A +-pi/4 rotation about a Pauli axis; `negative` folds the string's
/// sign and any Tdg inversions into the rotation direction.
struct PauliRotation {
    PauliString pauli;
    bool negative = false;  // true: -pi/4

    std::vector<std::uint32_t> support() const { return pauli.support(); }
};

/// Heisenberg-frame tableau: tracks U^dag X_i U and U^dag Z_i U for the
/// Clifford prefix U seen so far, so each T gate's emitted rotation is a
/// direct row read. Rows are symplectic bit vectors with sign bits.
class CliffordTableau {
  public:
    explicit CliffordTableau(std::uint32_t n);

    std::uint32_t num_qubits() const { return n_; }

    /// Appends a Clifford gate to the tracked prefix.
    void append(const Gate& g);

    /// Image of Z_q (or X_q) under conjugation by the inverse prefix.
    PauliString image_of_z(std::uint32_t q) const;
    PauliString image_of_x(std::uint32_t q) const;

    /// Symplectic consistency of all rows (images preserve commutation).
    bool check_symplectic() const;

  private:
    struct Row {
        std::vector<std::uint64_t> x, z;
        int phase = 0;  // i-power mod 4; letters in XZ form
    };

    void row_mult(Row& acc, const Row& other);  // acc := acc * other
    void append_h(std::uint32_t q);
    void append_s(std::uint32_t q, bool dagger);
    void append_cx(std::uint32_t c, std::uint32_t t);
    void append_pauli(GateKind k, std::uint32_t q);
    PauliString row_to_string(const Row& r) const;

    std::uint32_t n_;
    std::size_t words_;
    std::vector<Row> xrow_, zrow_;
};

struct PbcProgram {
    std::vector<PauliRotation> rotations;
    std::vector<PauliString> measurements;
};

/// Transforms a Clifford+T circuit (optionally ending in measurements)
/// into its Pauli-based form: Cliffords commute to the end, each T/Tdg
/// becomes a multi-qubit pi/4 rotation, terminal measurements become
/// Pauli measurements. Rotation count equals the input T-count.
PbcProgram to_pbc(const Circuit& c);

/// Greedy dependency-respecting layering: item i lands one layer after
/// its latest earlier-program-order support-intersecting predecessor.
/// Within a layer all supports are pairwise disjoint.
std::vector<std::vector<std::size_t>> parallelism_layers(
    const std::vector<std::vector<std::uint32_t>>& supports);

struct ParallelismStats {
    std::int64_t items = 0;
    std::int64_t layers = 0;
    double median = 0, q1 = 0, q3 = 0;
    std::int64_t max = 0;
    std::vector<std::int64_t> layer_sizes;
};

ParallelismStats parallelism_stats(const std::vector<std::vector<std::size_t>>& layers);

/// Qubit supports of a circuit's gates, for the TACO side of the
/// parallelism comparison.
std::vector<std::vector<std::uint32_t>> gate_supports(const Circuit& c);

}  // namespace taco
