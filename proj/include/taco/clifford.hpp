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
#include <vector>

#include "taco/exact_unitary.hpp"
#include "taco/gate.hpp"

namespace taco {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(PauliLetter p);
/// Projective product of two Pauli letters.
PauliLetter pauli_mul(PauliLetter a, PauliLetter b);

/// One of the 24 single-qubit Clifford operators modulo global phase.
/// Each class carries a canonical word: a coset representative over
/// {H, S} (at most three letters) followed by a Pauli.
class CliffordClass {
  public:
    CliffordClass() = default;  // identity

    static CliffordClass identity() { return {}; }
    /// Class of a generator matrix: H, S, Sdg, X, Y, Z.
    static CliffordClass of_kind(GateKind kind);
    /// Class of an exact unitary; throws if it is not Clifford.
    static CliffordClass from_exact(const ExactUnitary& u);
    static CliffordClass from_index(int index);
    static bool is_clifford(const ExactUnitary& u);

    int index() const { return index_; }
    static constexpr int kCount = 24;

    /// Matrix-product composition: (this * rhs), i.e. rhs applied first.
    CliffordClass times(const CliffordClass& rhs) const;
    CliffordClass adjoint() const;

    const ExactUnitary& exact() const;
    /// Canonical word in matrix order: {H,S} representative then Pauli.
    const std::vector<GateKind>& canonical_word() const;

    /// Splits the class as rep * pauli (pauli applied first): the
    /// non-Pauli coset representative's gates and the Pauli letter.
    const std::vector<GateKind>& nonpauli_word() const;
    PauliLetter pauli_part() const;

    /// Letter of (this) * P * (this)^dag — Clifford conjugation of a Pauli.
    PauliLetter conjugate_pauli(PauliLetter p) const;

    bool operator==(const CliffordClass& rhs) const { return index_ == rhs.index_; }
    bool operator!=(const CliffordClass& rhs) const { return index_ != rhs.index_; }

  private:
    explicit CliffordClass(int index) : index_(index) {}
    int index_ = 0;
};

}  // namespace taco
