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

#include <fstream>

#include "taco/decompose.hpp"
#include "taco/generators.hpp"
#include "taco/pipeline.hpp"
#include "taco/qasm.hpp"
#include "taco/transform.hpp"
#include "taco/verify.hpp"

using namespace taco;

namespace {
PipelineConfig desk_config() {
    PipelineConfig cfg;
    cfg.epsilon = 1e-3;
    cfg.search_tcount_cap = 34;
    return cfg;
}
}  // namespace

TEST_CASE("synthesize_circuit produces pure Clifford+T") {
    PipelineConfig cfg = desk_config();
    Circuit c(2);
    c.append(Gate::rz(Angle::from_radians(0.3), 0));
    c.append(Gate::rx(Angle::from_radians(0.4), 1));
    c.append(Gate::ry(Angle::from_radians(0.5), 0));
    c.append(Gate::rx_pi4(1));
    c.append(Gate::cx(0, 1));
    std::int64_t count = 0;
    const Circuit out = synthesize_circuit(c, cfg, &count);
    CHECK(count == 3);
    for (const auto& g : out.gates)
        CHECK((is_clifford_t(g.kind) || g.kind == GateKind::CX));
    CHECK(equiv_up_to_phase(unitary_of(c), unitary_of(out), 3 * cfg.epsilon));
}

TEST_CASE("pipeline on qft-4 with verification") {
    const PipelineResult r = [&] {
        PipelineConfig cfg = desk_config();
        cfg.verify = true;
        return run_pipeline(make_qft(4), cfg);
    }();
    CHECK(r.verify_ran);
    CHECK(r.verify_ok);
    CHECK(r.rz_after <= r.rz_before);
    CHECK(r.reduction.h_reduction > 0.5);
    const GateCounts rc = gate_counts(r.reduced);
    CHECK(rc.nontrivial_rz_count() == 0);
    // T-count is preserved by the reduction.
    CHECK(rc.t_count() == gate_counts(r.clifford_t).t_count());
}

TEST_CASE("reduced circuit emits clean QASM with no s inside rotation bodies") {
    PipelineConfig cfg = desk_config();
    const PipelineResult r = run_pipeline(make_qft(4), cfg);
    const std::string qasm = emit_qasm(r.reduced);
    const Circuit back = parse_qasm(qasm);
    CHECK(back == r.reduced);
    // Rotation runs contain no interleaved s/sdg: an s may only about a
    // run boundary (positions adjacent to non-rotation gates).
    std::vector<bool> in_body(back.gates.size(), false);
    for (std::size_t i = 1; i + 1 < back.gates.size(); ++i) {
        const auto& prev = back.gates[i - 1];
        const auto& next = back.gates[i + 1];
        const auto& g = back.gates[i];
        if ((g.kind == GateKind::S || g.kind == GateKind::Sdg) &&
            prev.qubits == g.qubits && next.qubits == g.qubits &&
            is_pi4_rotation(prev.kind) && is_pi4_rotation(next.kind)) {
            CHECK(false);  // s strictly interior to a rotation run
        }
    }
}

TEST_CASE("report JSON is byte-identical across runs") {
    PipelineConfig cfg = desk_config();
    const PipelineResult a = run_pipeline(make_qft(4), cfg);
    const PipelineResult b = run_pipeline(make_qft(4), cfg);
    CHECK(report_json(a, cfg) == report_json(b, cfg));
    CHECK(report_json(a, cfg).find("\"schema\": 1") != std::string::npos);
}

TEST_CASE("schedule and pbc exports are well formed") {
    PipelineConfig cfg = desk_config();
    const PipelineResult r = run_pipeline(make_qft(4), cfg);
    const std::string sj = schedule_json(r.reduced_schedule);
    CHECK(sj.find("total_cycles") != std::string::npos);
    CHECK(sj.find("compute_block") != std::string::npos);
    const std::string pj = pbc_json(r.pbc, r.taco_parallelism, r.pbc_parallelism);
    CHECK(pj.find("rotations") != std::string::npos);
    const std::string gantt = schedule_gantt(r.reduced_schedule);
    CHECK(gantt.find("total cycles") != std::string::npos);
}

TEST_CASE("counts_json shape") {
    Circuit c(1);
    c.append(Gate::t(0));
    const std::string j = counts_json(c);
    CHECK(j.find("\"t\": 1") != std::string::npos);
    CHECK(j.find("\"t_count\": 1") != std::string::npos);
}

TEST_CASE("cost model file loading") {
    const std::string path = "/tmp/taco_cm_test.json";
    {
        std::ofstream f(path);
        f << "{\"r_pi4\": 2, \"s\": 2, \"cx\": 2, \"h\": 1.0}\n";
    }
    const CostModel cm = load_cost_model(path);
    CHECK(cm.h == doctest::Approx(1.0));
    CHECK_THROWS(load_cost_model("/nonexistent/file.json"));
}

TEST_CASE("pipeline equivalence across benchmark generators at n <= 6") {
    PipelineConfig cfg = desk_config();
    cfg.verify = true;
    for (const char* spec : {"qft:4", "qpe:4:3", "ising:4:1", "wstate:5"}) {
        const PipelineResult r = run_pipeline(make_from_spec(spec), cfg);
        CAPTURE(spec);
        CHECK(r.verify_ran);
        CHECK(r.verify_ok);
        CHECK(r.verify_metric <= r.verify_budget);
    }
}

TEST_CASE("pipeline with measurements skips verification but completes") {
    PipelineConfig cfg = desk_config();
    cfg.verify = true;
    Circuit c(2, "m");
    c.append(Gate::h(0));
    c.append(Gate::t(0));
    c.append(Gate::cx(0, 1));
    c.append(Gate::measure_z(0));
    c.append(Gate::measure_z(1));
    const PipelineResult r = run_pipeline(c, cfg);
    CHECK(!r.verify_ran);
    CHECK(r.reduce_detail.measurement_flips.size() == 2);
}
