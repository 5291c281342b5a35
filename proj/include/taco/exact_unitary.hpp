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

#include "taco/gate.hpp"
#include "taco/ring.hpp"
#include "taco/unitary2.hpp"

namespace taco {

/// 2x2 unitary with entries in Z[omega]/sqrt(2)^k — the exact carrier of
/// single-qubit Clifford+T operators. All equality is projective (up to a
/// global power of omega); `canonical()` fixes the phase representative.
struct ExactUnitary {
    RingElt e[4];  // row-major

    static ExactUnitary identity();
    /// Exact matrix of one generator: H, S, Sdg, T, Tdg, X, Y, Z. The
    /// pi/4 X rotations are carried as H*T*H / H*Tdg*H (exact up to phase).
    static ExactUnitary of_kind(GateKind kind);

    ExactUnitary times(const ExactUnitary& rhs) const;
    ExactUnitary adjoint() const;
    ExactUnitary times_omega(int power) const;

    /// Smallest denominator exponent: max reduced k over entries.
    int sde() const;
    bool exactly_unitary() const;

    bool projectively_equal(const ExactUnitary& rhs) const;
    /// Lexicographically least among the eight omega-phase multiples;
    /// projective-equality classes map to a unique canonical form.
    ExactUnitary canonical() const;

    Unitary2 to_unitary2() const;

    bool operator==(const ExactUnitary& rhs) const;
    bool operator!=(const ExactUnitary& rhs) const { return !(*this == rhs); }
};

struct ExactUnitaryHash {
    std::size_t operator()(const ExactUnitary& u) const;
};

/// Exact product of a Clifford+T gate list given in application order.
ExactUnitary exact_unitary_of(const std::vector<Gate>& gates);
ExactUnitary exact_unitary_of_kinds(const std::vector<GateKind>& kinds_matrix_order);

}  // namespace taco
