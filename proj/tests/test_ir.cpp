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

#include <cmath>
#include <random>

#include "taco/circuit.hpp"
#include "taco/generators.hpp"
#include "taco/qasm.hpp"

using namespace taco;

TEST_CASE("angle normalization and canonicalization") {
    const Angle a = Angle::exact_pi_over_pow2(9, 2);  // 9*pi/4 = pi/4
    CHECK(a.num() == 1);
    CHECK(a.den_exp() == 2);

    const Angle b = Angle::exact_pi_over_pow2(-1, 2);  // -pi/4 = 7*pi/4
    CHECK(b.num() == 7);
    CHECK(b.den_exp() == 2);

    const Angle c = Angle::exact_pi_over_pow2(4, 3);  // reduces to pi/2
    CHECK(c.num() == 1);
    CHECK(c.den_exp() == 1);

    // Snap: double closest to pi/4.
    const Angle d = Angle::from_radians(0.7853981633974483);
    CHECK(d.is_exact());
    CHECK(d.num() == 1);
    CHECK(d.den_exp() == 2);

    const Angle e = Angle::from_radians(0.3);
    CHECK(!e.is_exact());
    CHECK(e.radians() == doctest::Approx(0.3).epsilon(1e-15));

    // Idempotence of canonicalization.
    const Angle f = Angle::from_radians(d.radians());
    CHECK(f == d);
    const Angle g = Angle::from_radians(e.radians());
    CHECK(g == e);
}

TEST_CASE("angle arithmetic") {
    const Angle q = Angle::pi_over(4);  // pi/4
    CHECK(q.pi_4_multiple() == 1);
    CHECK(q.negated().pi_4_multiple() == 7);
    CHECK(q.halved() == Angle::pi_over(8));
    CHECK(q.plus(q) == Angle::pi_over(2));
    CHECK(Angle::pi().is_multiple_of_pi_2());
    CHECK(!Angle::pi_over(8).is_multiple_of_pi_4());
}

TEST_CASE("gate invariants") {
    CHECK_THROWS(Gate(GateKind::CX, {1, 1}));
    CHECK_THROWS(Gate(GateKind::RZ, {0}));
    CHECK_THROWS(Gate(GateKind::T, {0}, {Angle::pi()}));
    Circuit c(2);
    c.append(Gate::measure_z(0));
    CHECK_THROWS(c.append(Gate::t(0)));
    c.append(Gate::t(1));  // other qubit still usable
}

TEST_CASE("parse_qasm basic gates") {
    const Circuit c = parse_qasm("qreg q[1]; t q[0];");
    REQUIRE(c.gates.size() == 1);
    CHECK(c.num_qubits == 1);
    CHECK(c.gates[0] == Gate::t(0));
}

TEST_CASE("parse_qasm exact angles") {
    const Circuit c = parse_qasm("qreg q[2]; cx q[0],q[1]; rz(pi/4) q[1];");
    REQUIRE(c.gates.size() == 2);
    CHECK(c.gates[0] == Gate::cx(0, 1));
    CHECK(c.gates[1].kind == GateKind::RZ);
    CHECK(c.gates[1].params[0].is_exact());
    CHECK(c.gates[1].params[0] == Angle::pi_over(4));
}

TEST_CASE("parse_qasm snaps a float angle within tolerance") {
    const Circuit c = parse_qasm("qreg q[1]; rz(0.7853981633974483) q[0];");
    REQUIRE(c.gates.size() == 1);
    CHECK(std::fabs(0.7853981633974483 - M_PI / 4) < 1e-9);
    CHECK(c.gates[0].params[0] == Angle::pi_over(4));
}

TEST_CASE("parse_qasm rx(pi/4) canonicalizes to the dedicated kind") {
    const Circuit c = parse_qasm("qreg q[1]; rx(pi/4) q[0]; rx(-pi/4) q[0];");
    CHECK(c.gates[0].kind == GateKind::RxPi4);
    CHECK(c.gates[1].kind == GateKind::RxPi4Dg);
}

TEST_CASE("parse_qasm header, creg, measure") {
    const Circuit c = parse_qasm(
        "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[2];\n"
        "h q[0];\ncx q[0],q[1];\nmeasure q[0] -> c[0];\nmeasure q[1] -> c[1];\n");
    CHECK(c.gates.size() == 4);
    CHECK(c.gates[2].kind == GateKind::MeasureZ);
}

TEST_CASE("parse_qasm error reporting") {
    CHECK_THROWS_AS(parse_qasm("qreg q[1]; frobnicate q[0];"), ParseError);
    CHECK_THROWS_AS(parse_qasm("qreg q[1]; t q[3];"), ParseError);
    CHECK_THROWS_AS(parse_qasm("qreg q[1]; qreg r[1]; t q[0];"), ParseError);
    CHECK_THROWS_AS(parse_qasm("qreg q[1]; t q[0]"), ParseError);
    try {
        parse_qasm("qreg q[1];\nt q[0];\nbogus q[0];");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

namespace {

Angle random_angle(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> mode(0, 2);
    switch (mode(rng)) {
        case 0: {
            std::uniform_int_distribution<int> k(0, 6);
            std::uniform_int_distribution<std::int64_t> num(0, 127);
            return Angle::exact_pi_over_pow2(num(rng), k(rng));
        }
        default: {
            std::uniform_real_distribution<double> r(0.05, 6.2);
            const Angle a = Angle::from_radians(r(rng));
            return a;
        }
    }
}

Circuit random_circuit(std::mt19937_64& rng, std::uint32_t n, int len) {
    Circuit c(n);
    std::uniform_int_distribution<int> kind(0, 14);
    std::uniform_int_distribution<std::uint32_t> qd(0, n - 1);
    for (int i = 0; i < len; ++i) {
        const auto q = qd(rng);
        auto q2 = qd(rng);
        while (q2 == q) q2 = qd(rng);
        switch (kind(rng)) {
            case 0: c.append(Gate::x(q)); break;
            case 1: c.append(Gate::y(q)); break;
            case 2: c.append(Gate::z(q)); break;
            case 3: c.append(Gate::h(q)); break;
            case 4: c.append(Gate::s(q)); break;
            case 5: c.append(Gate::sdg(q)); break;
            case 6: c.append(Gate::t(q)); break;
            case 7: c.append(Gate::tdg(q)); break;
            case 8: c.append(Gate::cx(q, q2)); break;
            case 9: c.append(Gate::cz(q, q2)); break;
            case 10: c.append(Gate::rz(random_angle(rng), q)); break;
            case 11: {
                // Avoid exact +-pi/4, which parses back as RxPi4.
                Angle a = random_angle(rng);
                while (a.is_exact() && a.den_exp() == 2 && (a.num() == 1 || a.num() == 7))
                    a = random_angle(rng);
                c.append(Gate::rx(a, q));
                break;
            }
            case 12: c.append(Gate::cp(random_angle(rng), q, q2)); break;
            case 13: c.append(Gate::rx_pi4(q)); break;
            default:
                c.append(Gate::u3(random_angle(rng), random_angle(rng), random_angle(rng), q));
                break;
        }
    }
    return c;
}

}  // namespace

TEST_CASE("emit/parse round trip is structural identity") {
    std::mt19937_64 rng(20260811);
    for (int iter = 0; iter < 1000; ++iter) {
        const Circuit c = random_circuit(rng, 4, 12);
        const Circuit back = parse_qasm(emit_qasm(c));
        REQUIRE(back.num_qubits == c.num_qubits);
        REQUIRE(back.gates.size() == c.gates.size());
        CHECK(back == c);
    }
}

TEST_CASE("gate_counts") {
    CHECK(gate_counts(Circuit(3)).total() == 0);

    Circuit c(2);
    c.append(Gate::t(0));
    c.append(Gate::tdg(1));
    c.append(Gate::h(0));
    c.append(Gate::cx(0, 1));
    const GateCounts gc = gate_counts(c);
    CHECK(gc.t_count() == 2);
    CHECK(gc.clifford_count() == 2);
    CHECK(gc.nontrivial_rz_count() == 0);

    Circuit r(1);
    r.append(Gate::rz(Angle::pi_over(2), 0));
    r.append(Gate::rz(Angle::pi_over(4), 0));
    r.append(Gate::rz(Angle::from_radians(0.3), 0));
    r.append(Gate::ry(Angle::from_radians(0.2), 0));
    CHECK(rz_count(r) == 2);
}

TEST_CASE("qft generator structure") {
    const Circuit qft = make_qft(18);
    const GateCounts gc = gate_counts(qft);
    CHECK(gc.count(GateKind::CP) == 153);
    CHECK(gc.count(GateKind::H) == 18);
    CHECK(gc.total() == 171);
}

TEST_CASE("generator specs parse") {
    CHECK(make_from_spec("qft:4").num_qubits == 4);
    CHECK(make_from_spec("qpe:5:11").num_qubits == 5);
    CHECK(make_from_spec("ising:6:2").num_qubits == 6);
    CHECK(make_from_spec("wstate:3").num_qubits == 3);
    CHECK_THROWS(make_from_spec("nope:3"));
}
