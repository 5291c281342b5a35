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

#include "taco/circuit.hpp"

namespace taco {

/// Rewrites every multi-qubit gate into CX plus single-qubit gates using
/// fixed identities (CZ via H-conjugated CX, SWAP as three CX, CP as the
/// two-CX three-RZ network, CCX as the standard 6-CX/7-T network).
/// Idempotent; the result is unitary-equivalent up to global phase.
Circuit decompose_to_cx_1q(const Circuit& c);

/// True when the circuit contains only CX, single-qubit gates, and
/// measurements.
bool is_decomposed(const Circuit& c);

}  // namespace taco
