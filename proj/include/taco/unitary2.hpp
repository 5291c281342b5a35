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

#include <array>
#include <complex>

#include "taco/gate.hpp"

namespace taco {

using cplx = std::complex<double>;

/// Dense 2x2 unitary. Entries row-major: e[0]=u00 e[1]=u01 e[2]=u10
/// e[3]=u11. Construction through `checked` verifies unitarity to 1e-12.
struct Unitary2 {
    std::array<cplx, 4> e{cplx(1, 0), cplx(0, 0), cplx(0, 0), cplx(1, 0)};

    static Unitary2 identity() { return {}; }
    static Unitary2 checked(const std::array<cplx, 4>& entries);

    cplx operator()(int r, int c) const { return e[2 * r + c]; }

    Unitary2 times(const Unitary2& rhs) const;   // matrix product this*rhs
    Unitary2 adjoint() const;
    double deviation_from_unitary() const;       // max-norm of U^dag U - I
};

/// Matrix of a single-qubit gate kind (with its parameters, if any).
Unitary2 gate_matrix(const Gate& g);

/// Product of a single-qubit gate list in application order:
/// M(g_last) * ... * M(g_0).
Unitary2 matrix_of_sequence(const std::vector<Gate>& gates);

/// Projective distance sqrt(max(0, 1 - |tr(A^dag B)|/2)); zero iff A and
/// B are equal up to global phase.
double projective_distance(const Unitary2& a, const Unitary2& b);

Unitary2 rz_matrix(double theta);
Unitary2 rx_matrix(double theta);
Unitary2 ry_matrix(double theta);

}  // namespace taco
