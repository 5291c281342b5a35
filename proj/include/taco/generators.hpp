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

#include "taco/circuit.hpp"

namespace taco {

/// Standard quantum Fourier transform: n Hadamards and n(n-1)/2
/// controlled-phase gates with angles pi/2^k (no terminal swaps).
Circuit make_qft(std::uint32_t n);

/// Phase estimation of a single-qubit phase gate RZ(phi) with phi drawn
/// from `seed`: qubit n-1 holds the eigenstate, qubits 0..n-2 count.
/// Ends with the inverse QFT on the counting register.
Circuit make_qpe(std::uint32_t n, std::uint64_t seed);

/// First-order Trotterized transverse-field Ising evolution on a line:
/// per step, ZZ couplings via CX-RZ-CX plus an RX on every site.
Circuit make_ising(std::uint32_t n, std::uint32_t steps);

/// W-state preparation over RY/CX/X: X on qubit 0 followed by a cascade
/// of controlled amplitude rotations.
Circuit make_wstate(std::uint32_t n);

/// Parses a generator spec "qft:N", "qpe:N:seed", "ising:N:steps",
/// "wstate:N" (missing trailing fields default to seed 7 / 1 step).
Circuit make_from_spec(const std::string& spec);

}  // namespace taco
