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

#include <complex>
#include <vector>

#include "taco/circuit.hpp"
#include "taco/unitary2.hpp"

namespace taco {

struct PauliFrame;

/// Dense 2^n x 2^n matrix oracle for circuits with n <= 10 qubits.
/// Qubit 0 is the least significant bit of the basis-state index.
class DenseUnitary {
  public:
    static constexpr int kMaxQubits = 10;

    explicit DenseUnitary(int num_qubits);  // identity

    int num_qubits() const { return n_; }
    std::size_t dim() const { return std::size_t{1} << n_; }

    cplx operator()(std::size_t row, std::size_t col) const { return m_[col * dim() + row]; }
    cplx& at(std::size_t row, std::size_t col) { return m_[col * dim() + row]; }

    /// Left-multiplies by the embedding of a one-, two- or three-qubit gate.
    void apply(const Gate& g);

    double deviation_from_unitary() const;

  private:
    void apply_1q(const Unitary2& u, std::uint32_t q);
    void apply_cx(std::uint32_t control, std::uint32_t target);
    void apply_2q_phase(std::uint32_t a, std::uint32_t b, cplx phase);  // |11> phase
    void apply_swap(std::uint32_t a, std::uint32_t b);

    int n_;
    std::vector<cplx> m_;  // column-major
};

/// Ordered product of the circuit's gate embeddings. Rejects circuits
/// with measurements or more than 10 qubits.
DenseUnitary unitary_of(const Circuit& c);

/// True iff 1 - |tr(A^dag B)| / 2^n <= tol.
bool equiv_up_to_phase(const DenseUnitary& a, const DenseUnitary& b, double tol);
/// The metric itself, for reporting.
double phase_distance(const DenseUnitary& a, const DenseUnitary& b);

/// True iff A ~ F*B up to phase, where F is the frame's tensor-product
/// Pauli operator.
bool equiv_mod_frame(const DenseUnitary& a, const DenseUnitary& b, const PauliFrame& frame,
                     double tol);
double phase_distance_mod_frame(const DenseUnitary& a, const DenseUnitary& b,
                                const PauliFrame& frame);

}  // namespace taco
