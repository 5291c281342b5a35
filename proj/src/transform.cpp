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

#include "taco/transform.hpp"

#include <cmath>
#include <stdexcept>

#include "taco/decompose.hpp"

namespace taco {

namespace {
constexpr double kPi = 3.1415926535897932384626433832795;

// Word for a single exact-or-snapped RZ(angle), in application order.
// Multiples of pi/2 become Cliffords, odd multiples of pi/4 become
// T-bearing words, everything else stays one nontrivial RZ.
std::vector<Gate> rz_word(const Angle& a, std::uint32_t q) {
    if (a.is_zero()) return {};
    if (a.is_multiple_of_pi_4()) {
        switch (a.pi_4_multiple()) {
            case 0: return {};
            case 1: return {Gate::t(q)};
            case 2: return {Gate::s(q)};
            case 3: return {Gate::t(q), Gate::s(q)};
            case 4: return {Gate::z(q)};
            case 5: return {Gate::t(q), Gate::z(q)};
            case 6: return {Gate::sdg(q)};
            case 7: return {Gate::tdg(q)};
        }
    }
    return {Gate::rz(a, q)};
}

int h_count(const std::vector<Gate>& gates) {
    int n = 0;
    for (const auto& g : gates)
        if (g.kind == GateKind::H) ++n;
    return n;
}

std::int64_t word_rz_count(const std::vector<Gate>& gates) {
    std::int64_t n = 0;
    for (const auto& g : gates) {
        switch (g.kind) {
            case GateKind::RZ:
            case GateKind::RX:
            case GateKind::RY:
                if (angle_needs_synthesis(g.params[0])) ++n;
                break;
            case GateKind::U3:
                for (const auto& p : g.params)
                    if (angle_needs_synthesis(p)) ++n;
                break;
            default:
                break;
        }
    }
    return n;
}
}  // namespace

std::vector<SingleQubitRun> segment_runs(const Circuit& c) {
    if (!is_decomposed(c))
        throw std::invalid_argument("segment_runs: circuit is not decomposed to CX + 1q");
    std::vector<SingleQubitRun> runs;
    std::vector<int> open(c.num_qubits, -1);  // index into runs
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        if (g.kind == GateKind::CX || g.kind == GateKind::MeasureZ) {
            for (auto q : g.qubits) open[q] = -1;
            continue;
        }
        const auto q = g.qubits[0];
        if (open[q] < 0) {
            open[q] = static_cast<int>(runs.size());
            runs.emplace_back();
            runs.back().qubit = q;
        }
        runs[open[q]].positions.push_back(i);
        runs[open[q]].gates.push_back(g);
    }
    return runs;
}

Unitary2 fuse(const SingleQubitRun& run) {
    Unitary2 u = matrix_of_sequence(run.gates);
    if (u.deviation_from_unitary() > 1e-12)
        throw std::invalid_argument("fuse: accumulated product drifted from unitarity");
    return u;
}

std::vector<Gate> resynthesize_min_rz(const Unitary2& u, std::uint32_t qubit) {
    if (u.deviation_from_unitary() > 1e-10)
        throw std::invalid_argument("resynthesize_min_rz: input is not unitary");

    // ZXZ Euler angles: U ~ RZ(alpha) RX(beta) RZ(gamma), gamma applied
    // first. At the |U01| in {0,1} singularities beta is pinned to 0/pi
    // and all phase folds into alpha.
    const double a00 = std::abs(u(0, 0));
    const double a01 = std::abs(u(0, 1));
    double alpha, beta, gamma;
    const double beta_raw = 2.0 * std::atan2(a01, a00);
    if (Angle::from_radians(beta_raw).is_zero()) {
        beta = 0.0;
        gamma = 0.0;
        alpha = std::arg(u(1, 1)) - std::arg(u(0, 0));
    } else if (Angle::from_radians(beta_raw - kPi).is_zero()) {
        beta = kPi;
        gamma = 0.0;
        alpha = std::arg(u(1, 0)) - std::arg(u(0, 1));
    } else {
        beta = beta_raw;
        // arg(U10) - arg(U00) = alpha - pi/2 away from the singularities.
        alpha = std::arg(u(1, 0)) - std::arg(u(0, 0)) + kPi / 2.0;
        gamma = (std::arg(u(1, 1)) - std::arg(u(0, 0))) - alpha;
    }

    std::vector<Gate> word;
    auto extend = [&word](std::vector<Gate> part) {
        for (auto& g : part) word.push_back(std::move(g));
    };
    extend(rz_word(Angle::from_radians(gamma), qubit));
    const auto beta_word = rz_word(Angle::from_radians(beta), qubit);
    if (!beta_word.empty()) {
        word.push_back(Gate::h(qubit));
        extend(beta_word);
        word.push_back(Gate::h(qubit));
    }
    extend(rz_word(Angle::from_radians(alpha), qubit));

    // Cancel adjacent H pairs created by empty Euler factors.
    std::vector<Gate> cleaned;
    for (auto& g : word) {
        if (!cleaned.empty() && g.kind == GateKind::H && cleaned.back().kind == GateKind::H)
            cleaned.pop_back();
        else
            cleaned.push_back(std::move(g));
    }

    if (projective_distance(matrix_of_sequence(cleaned), u) > 1e-6)
        throw std::logic_error("resynthesize_min_rz: extraction failed verification");
    return cleaned;
}

Circuit transform(const Circuit& c) {
    if (!is_decomposed(c))
        throw std::invalid_argument("transform: circuit is not decomposed to CX + 1q");
    const auto runs = segment_runs(c);

    // Replacement word for each circuit position that starts a rewritten
    // run; positions of dropped gates.
    std::vector<std::vector<Gate>> replacement(c.gates.size());
    std::vector<bool> rewritten(c.gates.size(), false);

    for (const auto& run : runs) {
        auto word = resynthesize_min_rz(fuse(run), run.qubit);
        const auto old_rz = word_rz_count(run.gates);
        const auto new_rz = word_rz_count(word);
        const bool accept =
            new_rz < old_rz ||
            (new_rz == old_rz && (word.size() < run.gates.size() ||
                                  (word.size() == run.gates.size() &&
                                   h_count(word) < h_count(run.gates))));
        if (!accept) continue;
        for (auto pos : run.positions) rewritten[pos] = true;
        replacement[run.start()] = std::move(word);
    }

    Circuit out(c.num_qubits, c.name);
    out.metadata = c.metadata;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        if (rewritten[i]) {
            for (auto& g : replacement[i]) out.gates.push_back(std::move(g));
        } else {
            out.gates.push_back(c.gates[i]);
        }
    }
    return out;
}

}  // namespace taco
