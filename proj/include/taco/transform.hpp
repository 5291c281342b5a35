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

#include <cstddef>
#include <vector>

#include "taco/circuit.hpp"
#include "taco/unitary2.hpp"

namespace taco {

/// A maximal stretch of single-qubit gates on one qubit, bounded by
/// two-qubit gates, measurements, or the circuit ends. `positions` are
/// the gates' indices in the host circuit, increasing.
struct SingleQubitRun {
    std::uint32_t qubit = 0;
    std::vector<std::size_t> positions;
    std::vector<Gate> gates;

    std::size_t start() const { return positions.front(); }
    std::size_t end() const { return positions.back(); }
};

/// Partitions all single-qubit gates of a decomposed circuit into
/// disjoint maximal runs, in order of first position.
std::vector<SingleQubitRun> segment_runs(const Circuit& c);

/// Product of the run's gate matrices in application order.
Unitary2 fuse(const SingleQubitRun& run);

/// Rewrites U as a word over {RZ, H, S, Sdg, Z, X, T, Tdg} with at most
/// three nontrivial RZ gates, via a ZXZ Euler split (the X factor is
/// realized as H RZ H) with Clifford/T snapping and H-pair cancellation.
/// Gates are returned in application order.
std::vector<Gate> resynthesize_min_rz(const Unitary2& u, std::uint32_t qubit);

/// Per-run resynthesis over a decomposed circuit. A run is replaced only
/// when the rewrite strictly lowers its nontrivial-RZ count, or ties it
/// with fewer total gates (then fewer H). Never moves gates across CX
/// boundaries.
Circuit transform(const Circuit& c);

}  // namespace taco
