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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "taco/angle.hpp"
#include "taco/ma_form.hpp"

namespace taco {

enum class SynthBackend { Exact, Search, External };

struct SynthOptions {
    SynthBackend backend = SynthBackend::Search;
    /// Largest T-count the bounded search explores before giving up.
    int search_tcount_cap = 24;
    /// Sidecar file for the External backend; empty falls back to the
    /// TACO_SYNTH_FILE environment variable.
    std::string sidecar_path;
};

class SynthError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Projective approximation distance sqrt(max(0, 1 - |tr(A^dag B)|/2)).
double synth_distance(const Unitary2& a, const Unitary2& b);

/// Approximates RZ(theta) by an MA word within `epsilon` in the metric
/// above. Exact multiples of pi/4 are synthesized exactly regardless of
/// backend; the Exact backend rejects anything else. The Search backend
/// enumerates MA words by T-count and returns the lexicographically
/// least word of minimal T-count within epsilon. The External backend
/// consumes pre-synthesized sequences from a sidecar file, falling back
/// to Search for angles the file does not cover.
MAWord synthesize_rz(const Angle& theta, double epsilon, const SynthOptions& opts = {});

/// Bounded-search approximation of an arbitrary single-qubit unitary;
/// the core of the Search backend.
std::optional<MAWord> search_approximation(const Unitary2& target, double epsilon, int tcount_cap);

/// Parses a matrix-order synthesis string over {H,T,S,X,W,I} (W = global
/// phase, dropped; I dropped) into gates in application order.
std::vector<Gate> parse_synth_string(const std::string& s);

/// One line of a synthesis sidecar file: angle, epsilon, letter string.
struct SidecarEntry {
    Angle theta;
    double epsilon;
    std::string letters;
};

std::vector<SidecarEntry> parse_sidecar(const std::string& text);
std::vector<SidecarEntry> load_sidecar_file(const std::string& path);

}  // namespace taco
