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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "taco/decompose.hpp"
#include "taco/generators.hpp"
#include "taco/qasm.hpp"
#include "taco/transform.hpp"
#include "taco/verify.hpp"

using namespace taco;

TEST_CASE("segment_runs boundaries") {
    Circuit c(2);
    c.append(Gate::h(0));
    c.append(Gate::cx(0, 1));
    c.append(Gate::t(0));
    const auto runs = segment_runs(c);
    REQUIRE(runs.size() == 2);
    CHECK(runs[0].qubit == 0);
    CHECK(runs[0].gates.size() == 1);
    CHECK(runs[1].gates.size() == 1);

    Circuit d(2);
    d.append(Gate::rz(Angle::from_radians(0.1), 0));
    d.append(Gate::rz(Angle::from_radians(0.2), 0));
    d.append(Gate::rz(Angle::from_radians(0.3), 1));
    const auto runs2 = segment_runs(d);
    REQUIRE(runs2.size() == 2);
    CHECK(runs2[0].qubit == 0);
    CHECK(runs2[0].gates.size() == 2);
    CHECK(runs2[1].qubit == 1);
    CHECK(runs2[1].gates.size() == 1);
}

TEST_CASE("segment_runs covers every single-qubit gate once") {
    const Circuit qft = decompose_to_cx_1q(make_qft(18));
    const auto runs = segment_runs(qft);
    std::vector<bool> covered(qft.gates.size(), false);
    for (const auto& r : runs)
        for (auto pos : r.positions) {
            CHECK(!covered[pos]);
            covered[pos] = true;
        }
    for (std::size_t i = 0; i < qft.gates.size(); ++i)
        CHECK(covered[i] == (qft.gates[i].kind != GateKind::CX));
}

TEST_CASE("segment_runs rejects undecomposed input") {
    Circuit c(2);
    c.append(Gate::cz(0, 1));
    CHECK_THROWS(segment_runs(c));
}

TEST_CASE("fuse additive Z rotations") {
    SingleQubitRun run;
    run.qubit = 0;
    run.gates = {Gate::rz(Angle::from_radians(0.3), 0), Gate::rz(Angle::from_radians(0.4), 0)};
    run.positions = {0, 1};
    const Unitary2 u = fuse(run);
    CHECK(projective_distance(u, rz_matrix(0.7)) < 1e-6);

    SingleQubitRun hh;
    hh.qubit = 0;
    hh.gates = {Gate::h(0), Gate::h(0)};
    hh.positions = {0, 1};
    CHECK(projective_distance(fuse(hh), Unitary2::identity()) < 1e-6);
}

TEST_CASE("fuse matches an independent re-multiplication") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> kd(0, 5);
    std::uniform_real_distribution<double> ad(0.0, 6.28);
    SingleQubitRun run;
    run.qubit = 0;
    for (int i = 0; i < 10; ++i) {
        switch (kd(rng)) {
            case 0: run.gates.push_back(Gate::h(0)); break;
            case 1: run.gates.push_back(Gate::t(0)); break;
            case 2: run.gates.push_back(Gate::s(0)); break;
            case 3: run.gates.push_back(Gate::rz(Angle::from_radians(ad(rng)), 0)); break;
            case 4: run.gates.push_back(Gate::rx(Angle::from_radians(ad(rng)), 0)); break;
            default: run.gates.push_back(Gate::ry(Angle::from_radians(ad(rng)), 0)); break;
        }
        run.positions.push_back(i);
    }
    // Oracle: dense 1-qubit circuit unitary.
    Circuit c(1);
    for (const auto& g : run.gates) c.append(g);
    const DenseUnitary del = unitary_of(c);
    const Unitary2 u = fuse(run);
    Unitary2 o;
    o.e = {del(0, 0), del(0, 1), del(1, 0), del(1, 1)};
    CHECK(projective_distance(u, o) < 1e-6);
}

TEST_CASE("resynthesize_min_rz structure") {
    // Pure Z rotation stays one RZ.
    const auto wz = resynthesize_min_rz(rz_matrix(0.7), 0);
    REQUIRE(wz.size() == 1);
    CHECK(wz[0].kind == GateKind::RZ);

    // Generic Y rotation: one nontrivial RZ, two H, rest Clifford.
    const auto wy = resynthesize_min_rz(ry_matrix(0.41), 0);
    int h = 0, rz = 0;
    for (const auto& g : wy) {
        if (g.kind == GateKind::H) ++h;
        if (g.kind == GateKind::RZ && angle_needs_synthesis(g.params[0])) ++rz;
    }
    CHECK(h == 2);
    CHECK(rz == 1);
    CHECK(projective_distance(matrix_of_sequence(wy), ry_matrix(0.41)) < 1e-6);

    // Hadamard: Clifford-only word.
    const auto wh = resynthesize_min_rz(gate_matrix(Gate::h(0)), 0);
    for (const auto& g : wh) CHECK(g.kind != GateKind::RZ);
    CHECK(projective_distance(matrix_of_sequence(wh), gate_matrix(Gate::h(0))) < 1e-6);
}

TEST_CASE("resynthesize_min_rz emits at most three nontrivial RZ") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ad(0.0, 6.28);
    for (int it = 0; it < 300; ++it) {
        const Unitary2 u =
            rz_matrix(ad(rng)).times(rx_matrix(ad(rng))).times(rz_matrix(ad(rng)));
        const auto w = resynthesize_min_rz(u, 3);
        int rz = 0;
        for (const auto& g : w)
            if (g.kind == GateKind::RZ && angle_needs_synthesis(g.params[0])) ++rz;
        CHECK(rz <= 3);
        for (const auto& g : w) CHECK(g.qubits[0] == 3);
        CHECK(projective_distance(matrix_of_sequence(w), u) < 1e-6);
    }
}

TEST_CASE("transform merges rotation runs") {
    Circuit c(1);
    c.append(Gate::rz(Angle::from_radians(0.3), 0));
    c.append(Gate::rz(Angle::from_radians(0.4), 0));
    const Circuit out = transform(c);
    CHECK(rz_count(c) == 2);
    CHECK(rz_count(out) == 1);
    REQUIRE(out.gates.size() == 1);
    CHECK(out.gates[0].kind == GateKind::RZ);
}

TEST_CASE("transform leaves an already-minimal circuit alone") {
    Circuit c(1);
    c.append(Gate::t(0));
    CHECK(transform(c) == c);
}

TEST_CASE("rz_count snapping rules") {
    Circuit c(1);
    c.append(Gate::rz(Angle::pi_over(2), 0));
    CHECK(rz_count(c) == 0);
    Circuit d(1);
    d.append(Gate::rz(Angle::pi_over(4), 0));
    CHECK(rz_count(d) == 0);
    Circuit e(1);
    e.append(Gate::rz(Angle::from_radians(0.3), 0));
    e.append(Gate::ry(Angle::from_radians(0.2), 0));
    CHECK(rz_count(e) == 2);
}

namespace {
Circuit random_decomposed(std::mt19937_64& rng, std::uint32_t n, int len) {
    Circuit c(n);
    std::uniform_int_distribution<int> kind(0, 8);
    std::uniform_int_distribution<std::uint32_t> qd(0, n - 1);
    std::uniform_real_distribution<double> ad(0.0, 6.28);
    for (int i = 0; i < len; ++i) {
        auto q = qd(rng), q2 = qd(rng);
        while (q2 == q) q2 = qd(rng);
        switch (kind(rng)) {
            case 0: c.append(Gate::h(q)); break;
            case 1: c.append(Gate::t(q)); break;
            case 2: c.append(Gate::s(q)); break;
            case 3: c.append(Gate::x(q)); break;
            case 4: c.append(Gate::rz(Angle::from_radians(ad(rng)), q)); break;
            case 5: c.append(Gate::rx(Angle::from_radians(ad(rng)), q)); break;
            case 6: c.append(Gate::ry(Angle::from_radians(ad(rng)), q)); break;
            default: c.append(Gate::cx(q, q2)); break;
        }
    }
    return c;
}
}  // namespace

TEST_CASE("transform properties: monotone, equivalent, CX-local, deterministic") {
    std::mt19937_64 rng(2026);
    for (int it = 0; it < 30; ++it) {
        const std::uint32_t n = 2 + it % 4;
        const Circuit in = random_decomposed(rng, n, 18);
        const Circuit out = transform(in);
        CHECK(rz_count(out) <= rz_count(in));
        CHECK(equiv_up_to_phase(unitary_of(in), unitary_of(out), 1e-9));
        // CX gates survive in the same relative order with the same operands.
        std::vector<Gate> cx_in, cx_out;
        for (const auto& g : in.gates)
            if (g.kind == GateKind::CX) cx_in.push_back(g);
        for (const auto& g : out.gates)
            if (g.kind == GateKind::CX) cx_out.push_back(g);
        CHECK(cx_in == cx_out);
        CHECK(transform(in) == out);  // deterministic
    }
}

TEST_CASE("transform on decomposed qft-4 preserves the unitary") {
    const Circuit in = decompose_to_cx_1q(make_qft(4));
    const Circuit out = transform(in);
    CHECK(rz_count(out) <= rz_count(in));
    CHECK(equiv_up_to_phase(unitary_of(in), unitary_of(out), 1e-9));
}
