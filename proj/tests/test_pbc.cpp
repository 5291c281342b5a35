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

#include "taco/pbc.hpp"
#include "taco/verify.hpp"

using namespace taco;

namespace {
// Dense conjugation oracle: U^dag (Z_q) U compared entrywise against the
// signed Pauli operator of the tableau image.
bool image_matches_dense(const Circuit& prefix, std::uint32_t q, const PauliString& img) {
    const DenseUnitary u = unitary_of(prefix);
    Circuit pc(prefix.num_qubits);
    for (std::uint32_t i = 0; i < prefix.num_qubits; ++i) {
        switch (img.letters[i]) {
            case PauliLetter::X: pc.append(Gate::x(i)); break;
            case PauliLetter::Y: pc.append(Gate::y(i)); break;
            case PauliLetter::Z: pc.append(Gate::z(i)); break;
            default: break;
        }
    }
    const DenseUnitary p = unitary_of(pc);
    Circuit zc(prefix.num_qubits);
    zc.append(Gate::z(q));
    const DenseUnitary z = unitary_of(zc);
    // Compare Z_q * U against sign * U * P.
    const std::size_t d = u.dim();
    double diff = 0;
    const double sign = img.negative ? -1.0 : 1.0;
    for (std::size_t c = 0; c < d; ++c)
        for (std::size_t r = 0; r < d; ++r) {
            cplx lhs(0, 0), rhs(0, 0);
            for (std::size_t k = 0; k < d; ++k) {
                lhs += z(r, k) * u(k, c);
                rhs += u(r, k) * p(k, c);
            }
            diff = std::max(diff, std::abs(lhs - sign * rhs));
        }
    return diff < 1e-9;
}

Circuit random_clifford(std::mt19937_64& rng, std::uint32_t n, int len) {
    Circuit c(n);
    std::uniform_int_distribution<int> kd(0, 6);
    std::uniform_int_distribution<std::uint32_t> qd(0, n - 1);
    for (int i = 0; i < len; ++i) {
        auto q = qd(rng), q2 = qd(rng);
        while (q2 == q) q2 = qd(rng);
        switch (kd(rng)) {
            case 0: c.append(Gate::h(q)); break;
            case 1: c.append(Gate::s(q)); break;
            case 2: c.append(Gate::sdg(q)); break;
            case 3: c.append(Gate::x(q)); break;
            case 4: c.append(Gate::y(q)); break;
            case 5: c.append(Gate::z(q)); break;
            default: c.append(Gate::cx(q, q2)); break;
        }
    }
    return c;
}
}  // namespace

TEST_CASE("to_pbc base cases") {
    Circuit t(1);
    t.append(Gate::t(0));
    auto p = to_pbc(t);
    REQUIRE(p.rotations.size() == 1);
    CHECK(p.rotations[0].pauli.to_string() == "+Z");
    CHECK(!p.rotations[0].negative);

    Circuit ht(1);
    ht.append(Gate::h(0));
    ht.append(Gate::t(0));
    p = to_pbc(ht);
    CHECK(p.rotations[0].pauli.to_string() == "+X");

    Circuit cxt(2);
    cxt.append(Gate::cx(0, 1));
    cxt.append(Gate::t(1));
    p = to_pbc(cxt);
    CHECK(p.rotations[0].pauli.to_string() == "+ZZ");

    Circuit tdg(1);
    tdg.append(Gate::tdg(0));
    p = to_pbc(tdg);
    CHECK(p.rotations[0].negative);
}

TEST_CASE("to_pbc rotation count equals input T-count") {
    std::mt19937_64 rng(1);
    for (int it = 0; it < 20; ++it) {
        Circuit c = random_clifford(rng, 4, 20);
        std::uniform_int_distribution<std::uint32_t> qd(0, 3);
        int tcount = 5 + it % 7;
        for (int i = 0; i < tcount; ++i) c.append(Gate::t(qd(rng)));
        CHECK(to_pbc(c).rotations.size() == static_cast<std::size_t>(tcount));
    }
}

TEST_CASE("to_pbc terminal measurements become Z images") {
    Circuit c(2);
    c.append(Gate::h(0));
    c.append(Gate::cx(0, 1));
    c.append(Gate::measure_z(0));
    c.append(Gate::measure_z(1));
    const auto p = to_pbc(c);
    REQUIRE(p.measurements.size() == 2);
    // Images are U^dag Z_q U for the prefix U = CX * H:
    // Z_0 -> H (CX Z_0 CX) H = X_0; Z_1 -> H (Z_0 Z_1) H = X_0 Z_1.
    CHECK(p.measurements[0].to_string() == "+XI");
    CHECK(p.measurements[1].to_string() == "+XZ");
}

TEST_CASE("to_pbc rejects unsynthesized input") {
    Circuit c(1);
    c.append(Gate::rz(Angle::from_radians(0.3), 0));
    CHECK_THROWS(to_pbc(c));
}

TEST_CASE("tableau soundness against dense conjugation") {
    std::mt19937_64 rng(20260811);
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        const std::uint32_t n = 2 + it % 5;  // up to 6 qubits
        const Circuit prefix = random_clifford(rng, n, 3 + it % 14);
        CliffordTableau tab(n);
        for (const auto& g : prefix.gates) tab.append(g);
        CHECK(tab.check_symplectic());
        std::uniform_int_distribution<std::uint32_t> qd(0, n - 1);
        const auto q = qd(rng);
        CHECK(image_matches_dense(prefix, q, tab.image_of_z(q)));
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("parallelism_layers examples") {
    // Disjoint singletons share a layer.
    auto layers = parallelism_layers({{0}, {1}});
    REQUIRE(layers.size() == 1);
    CHECK(layers[0].size() == 2);

    // Pairwise intersecting strings serialize.
    layers = parallelism_layers({{0, 1}, {1, 2}, {0, 2}});
    REQUIRE(layers.size() == 3);
    for (const auto& l : layers) CHECK(l.size() == 1);

    CHECK_THROWS(parallelism_layers({{}}));
}

TEST_CASE("layering validity: disjoint within layers, dependencies respected") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> sz(1, 3);
    std::uniform_int_distribution<std::uint32_t> qd(0, 9);
    std::vector<std::vector<std::uint32_t>> supports;
    for (int i = 0; i < 200; ++i) {
        std::vector<std::uint32_t> s;
        const int m = sz(rng);
        while (static_cast<int>(s.size()) < m) {
            const auto q = qd(rng);
            if (std::find(s.begin(), s.end(), q) == s.end()) s.push_back(q);
        }
        supports.push_back(s);
    }
    const auto layers = parallelism_layers(supports);
    std::vector<std::int64_t> layer_of(supports.size());
    for (std::size_t l = 0; l < layers.size(); ++l)
        for (const auto idx : layers[l]) layer_of[idx] = static_cast<std::int64_t>(l);

    auto intersects = [&](std::size_t a, std::size_t b) {
        for (const auto q : supports[a])
            for (const auto p : supports[b])
                if (q == p) return true;
        return false;
    };
    for (std::size_t l = 0; l < layers.size(); ++l)
        for (std::size_t i = 0; i < layers[l].size(); ++i)
            for (std::size_t j = i + 1; j < layers[l].size(); ++j)
                CHECK(!intersects(layers[l][i], layers[l][j]));
    for (std::size_t i = 0; i < supports.size(); ++i)
        for (std::size_t j = i + 1; j < supports.size(); ++j)
            if (intersects(i, j)) CHECK(layer_of[i] < layer_of[j]);
}

TEST_CASE("parallelism_stats") {
    const auto layers = parallelism_layers({{0}, {1}, {2}});
    const ParallelismStats one = parallelism_stats(layers);
    CHECK(one.median == doctest::Approx(3.0));
    CHECK(one.max == 3);
    CHECK(one.items == 3);

    const ParallelismStats empty = parallelism_stats({});
    CHECK(empty.items == 0);
    CHECK(empty.max == 0);
    CHECK(empty.median == 0.0);
}

TEST_CASE("pauli string support and text form") {
    PauliString p(4);
    p.letters[1] = PauliLetter::Z;
    p.letters[3] = PauliLetter::Y;
    p.negative = true;
    CHECK(p.support() == std::vector<std::uint32_t>{1, 3});
    CHECK(p.to_string() == "-IZIY");
}
