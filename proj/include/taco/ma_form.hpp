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

#include <string>
#include <vector>

#include "taco/clifford.hpp"
#include "taco/exact_unitary.hpp"

namespace taco {

enum class Syllable : std::uint8_t { HT = 0, SHT = 1 };

/// Matsumoto-Amano normal form (T|e)(HT|SHT)*C, stored in matrix order:
/// the leftmost factor (optional T) is applied last, the terminal
/// Clifford first. The T-count is leading_t + syllables.size().
struct MAWord {
    bool leading_t = false;
    std::vector<Syllable> syllables;
    CliffordClass terminal;

    int t_count() const { return (leading_t ? 1 : 0) + static_cast<int>(syllables.size()); }

    /// Gate kinds in matrix order (T?, H T | S H T ..., Clifford word).
    std::vector<GateKind> kinds_matrix_order() const;
    /// Gate list in application order for a given qubit.
    std::vector<Gate> to_gates(std::uint32_t qubit) const;
    ExactUnitary to_exact() const;

    /// Letter string over {T,H,S,X} in matrix order (Z expands to SS,
    /// Y to SSX); consumable by parse_synth_string.
    std::string to_letters() const;

    bool operator==(const MAWord& rhs) const {
        return leading_t == rhs.leading_t && syllables == rhs.syllables &&
               terminal == rhs.terminal;
    }
};

/// Normalizes an exact Clifford+T unitary to its unique MA word by
/// denominator-exponent descent on the first column, peeling the unique
/// syllable whose inverse reduces the sde, then a Clifford lookup.
/// The result reproduces the input projectively with minimal T-count.
MAWord ma_normalize(const ExactUnitary& u);

/// Exhaustive minimal T-count oracle: enumerates all MA words with
/// T-count 0..bound and returns the count of the first projective match.
/// Throws std::runtime_error when the bound is exhausted.
int bfs_min_tcount(const ExactUnitary& u, int bound);

}  // namespace taco
