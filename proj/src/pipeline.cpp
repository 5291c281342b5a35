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

#include "taco/pipeline.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "taco/decompose.hpp"
#include "taco/transform.hpp"
#include "taco/verify.hpp"

namespace taco {

using ordered_json = nlohmann::ordered_json;

namespace {

double jround(double x) { return std::round(x * 1e9) / 1e9; }

void append_word(Circuit& out, const MAWord& w, std::uint32_t q) {
    for (const auto& g : w.to_gates(q)) out.gates.push_back(g);
}

void synthesize_rz_into(Circuit& out, const Angle& theta, std::uint32_t q,
                        const PipelineConfig& cfg, std::int64_t* count) {
    if (theta.is_zero()) return;
    SynthOptions opts;
    opts.backend = cfg.backend;
    opts.search_tcount_cap = cfg.search_tcount_cap;
    opts.sidecar_path = cfg.synth_file;
    if (!theta.is_multiple_of_pi_4() && count) ++*count;
    append_word(out, synthesize_rz(theta, cfg.epsilon, opts), q);
}

void synthesize_gate_into(Circuit& out, const Gate& g, const PipelineConfig& cfg,
                          std::int64_t* count) {
    const std::uint32_t q = g.qubits[0];
    switch (g.kind) {
        case GateKind::RZ:
            synthesize_rz_into(out, g.params[0], q, cfg, count);
            return;
        case GateKind::RxPi4:
            out.gates.push_back(Gate::h(q));
            out.gates.push_back(Gate::t(q));
            out.gates.push_back(Gate::h(q));
            return;
        case GateKind::RxPi4Dg:
            out.gates.push_back(Gate::h(q));
            out.gates.push_back(Gate::tdg(q));
            out.gates.push_back(Gate::h(q));
            return;
        case GateKind::RX:
            out.gates.push_back(Gate::h(q));
            synthesize_rz_into(out, g.params[0], q, cfg, count);
            out.gates.push_back(Gate::h(q));
            return;
        case GateKind::RY:
        case GateKind::U3: {
            // Euler-split into RZ/H/Clifford gates, then lower the RZs.
            const auto word = resynthesize_min_rz(gate_matrix(g), q);
            for (const auto& wg : word) {
                if (wg.kind == GateKind::RZ)
                    synthesize_rz_into(out, wg.params[0], q, cfg, count);
                else
                    out.gates.push_back(wg);
            }
            return;
        }
        default:
            out.gates.push_back(g);
            return;
    }
}

}  // namespace

Circuit synthesize_circuit(const Circuit& transformed, const PipelineConfig& cfg,
                           std::int64_t* synth_count) {
    Circuit out(transformed.num_qubits, transformed.name);
    out.metadata = transformed.metadata;
    for (const auto& g : transformed.gates) {
        if (g.kind == GateKind::CX || g.kind == GateKind::MeasureZ || is_clifford_t(g.kind)) {
            out.gates.push_back(g);
            continue;
        }
        synthesize_gate_into(out, g, cfg, synth_count);
    }
    return out;
}

PipelineResult run_pipeline(const Circuit& input, const PipelineConfig& cfg) {
    set_angle_tolerance(cfg.tau_angle);
    PipelineResult r;
    r.input = input;
    r.decomposed = decompose_to_cx_1q(input);
    r.rz_before = rz_count(r.decomposed);
    r.transformed = transform(r.decomposed);
    r.rz_after = rz_count(r.transformed);
    r.clifford_t = synthesize_circuit(r.transformed, cfg, &r.synthesized_rz);

    auto reduce_res = reduce_circuit(r.clifford_t);
    r.reduced = reduce_res.circuit;
    r.frame = reduce_res.frame;
    r.reduction = clifford_reduction_stats(r.clifford_t, r.reduced, &reduce_res);
    r.reduce_detail = std::move(reduce_res);

    const LayoutPlan plan = plan_layout(input.num_qubits, cfg.compute_blocks);
    r.cost = speedup_report(r.clifford_t, r.reduced, plan, cfg.cost_model);
    r.reduced_schedule = schedule(r.reduced, plan, cfg.cost_model);

    r.pbc = to_pbc(r.clifford_t);
    std::vector<std::vector<std::uint32_t>> pbc_supports;
    for (const auto& rot : r.pbc.rotations) pbc_supports.push_back(rot.support());
    r.pbc_parallelism = parallelism_stats(parallelism_layers(pbc_supports));
    r.taco_parallelism = parallelism_stats(parallelism_layers(gate_supports(r.reduced)));

    bool has_measure = false;
    for (const auto& g : input.gates)
        if (g.kind == GateKind::MeasureZ) has_measure = true;
    if (cfg.verify && input.num_qubits <= DenseUnitary::kMaxQubits && !has_measure) {
        r.verify_ran = true;
        r.verify_budget = static_cast<double>(r.synthesized_rz) * cfg.epsilon + 1e-9;
        r.verify_metric = phase_distance_mod_frame(unitary_of(input), unitary_of(r.reduced),
                                                   r.frame);
        r.verify_ok = r.verify_metric <= r.verify_budget;
    }
    return r;
}

namespace {

ordered_json counts_node(const Circuit& c) {
    const GateCounts gc = gate_counts(c);
    ordered_json by_kind = ordered_json::object();
    for (const auto& [kind, count] : gc.by_kind) by_kind[gate_name(kind)] = count;
    ordered_json node;
    node["gates"] = gc.total();
    node["by_kind"] = by_kind;
    node["t_count"] = gc.t_count();
    node["clifford_count"] = gc.clifford_count();
    node["nontrivial_rz"] = gc.nontrivial_rz_count();
    return node;
}

ordered_json parallelism_node(const ParallelismStats& st) {
    ordered_json node;
    node["items"] = st.items;
    node["layers"] = st.layers;
    node["median"] = jround(st.median);
    node["q1"] = jround(st.q1);
    node["q3"] = jround(st.q3);
    node["max"] = st.max;
    node["layer_sizes"] = st.layer_sizes;
    return node;
}

const char* backend_name(SynthBackend b) {
    switch (b) {
        case SynthBackend::Exact: return "exact";
        case SynthBackend::Search: return "search";
        case SynthBackend::External: return "external";
    }
    return "?";
}

}  // namespace

std::string report_json(const PipelineResult& r, const PipelineConfig& cfg) {
    ordered_json j;
    j["schema"] = 1;
    j["input"] = {{"name", r.input.name}, {"qubits", r.input.num_qubits}};
    j["input"]["counts"] = counts_node(r.input);
    j["decomposed"] = counts_node(r.decomposed);
    j["transform"] = {{"rz_before", r.rz_before}, {"rz_after", r.rz_after}};
    j["synthesis"] = {{"backend", backend_name(cfg.backend)},
                      {"epsilon", jround(cfg.epsilon)},
                      {"approximate_syntheses", r.synthesized_rz}};
    j["clifford_t"] = counts_node(r.clifford_t);
    j["reduced"] = counts_node(r.reduced);

    ordered_json red;
    red["h_before"] = r.reduction.h_before;
    red["h_after"] = r.reduction.h_after;
    red["h_reduction"] = jround(r.reduction.h_reduction);
    red["s_before"] = r.reduction.s_before;
    red["s_after"] = r.reduction.s_after;
    red["s_reduction"] = jround(r.reduction.s_reduction);
    red["clifford_before"] = r.reduction.clifford_before;
    red["clifford_after"] = r.reduction.clifford_after;
    red["clifford_reduction"] = jround(r.reduction.clifford_reduction);
    red["h_reduction_excl_reemitted"] = jround(r.reduction.h_reduction_excl_reemitted);
    red["s_reduction_excl_reemitted"] = jround(r.reduction.s_reduction_excl_reemitted);
    red["clifford_reduction_excl_reemitted"] =
        jround(r.reduction.clifford_reduction_excl_reemitted);
    red["reemitted_h"] = r.reduce_detail.reemitted_h;
    red["reemitted_s"] = r.reduce_detail.reemitted_s;
    red["boundary_s"] = r.reduce_detail.boundary_s;
    j["reduction"] = red;

    j["frame"] = {{"letters", r.frame.to_string()}, {"phase_mod4", r.frame.phase_mod4()}};

    ordered_json time;
    time["serial_baseline"] = jround(r.cost.baseline_serial);
    time["serial_reduced"] = jround(r.cost.reduced_serial);
    time["serial_ratio"] = jround(r.cost.serial_ratio);
    time["scheduled_baseline"] = jround(r.cost.baseline_scheduled);
    time["scheduled_reduced"] = jround(r.cost.reduced_scheduled);
    time["scheduled_ratio"] = jround(r.cost.scheduled_ratio);
    j["time"] = time;

    j["tiles"] = {{"qubits", r.cost.plan.n},
                  {"memory", r.cost.plan.memory_tiles},
                  {"compute_blocks", r.cost.plan.compute_blocks},
                  {"total", r.cost.plan.total_tiles},
                  {"baseline_formula", jround(r.cost.baseline_tile_count)}};
    j["locality"] = {{"rotations_in_runs_ge10", jround(r.cost.locality_ge10)}};
    j["parallelism"] = {{"taco", parallelism_node(r.taco_parallelism)},
                        {"pbc", parallelism_node(r.pbc_parallelism)}};
    j["verify"] = {{"ran", r.verify_ran},
                   {"ok", r.verify_ok},
                   {"metric", jround(r.verify_metric)},
                   {"budget", jround(r.verify_budget)}};
    return j.dump(2) + "\n";
}

std::string schedule_json(const Schedule& s) {
    ordered_json j;
    j["total_cycles"] = jround(s.total_cycles);
    ordered_json events = ordered_json::array();
    for (const auto& e : s.events) {
        ordered_json ev;
        ev["start"] = jround(e.start);
        ev["duration"] = jround(e.duration);
        switch (e.resource) {
            case ResourceKind::MemorySlot: ev["resource"] = "memory_slot"; break;
            case ResourceKind::AncillaBus: ev["resource"] = "ancilla_bus"; break;
            case ResourceKind::ComputeBlock: ev["resource"] = "compute_block"; break;
        }
        ev["index"] = e.resource_index;
        ev["op"] = e.op;
        events.push_back(ev);
    }
    j["events"] = events;
    return j.dump(2) + "\n";
}

std::string schedule_gantt(const Schedule& s) {
    std::ostringstream out;
    out << "total cycles: " << s.total_cycles << "\n";
    for (const auto& e : s.events) {
        const char* rk = e.resource == ResourceKind::MemorySlot    ? "slot"
                         : e.resource == ResourceKind::AncillaBus ? "bus"
                                                                  : "block";
        out << "[" << e.start << ", " << e.end() << ") " << rk << " " << e.resource_index << " "
            << e.op << "\n";
    }
    return out.str();
}

std::string pbc_json(const PbcProgram& p, const ParallelismStats& taco,
                     const ParallelismStats& pbc) {
    ordered_json j;
    ordered_json rots = ordered_json::array();
    for (const auto& r : p.rotations) {
        ordered_json rot;
        rot["pauli"] = r.pauli.to_string().substr(1);
        rot["sign"] = r.negative ? -1 : 1;
        rots.push_back(rot);
    }
    j["rotations"] = rots;
    ordered_json meas = ordered_json::array();
    for (const auto& m : p.measurements) {
        ordered_json mm;
        mm["pauli"] = m.to_string().substr(1);
        mm["sign"] = m.negative ? -1 : 1;
        meas.push_back(mm);
    }
    j["measurements"] = meas;
    j["parallelism"] = {{"taco", parallelism_node(taco)}, {"pbc", parallelism_node(pbc)}};
    return j.dump(2) + "\n";
}

std::string counts_json(const Circuit& c) { return counts_node(c).dump(2) + "\n"; }

CostModel load_cost_model(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open cost model file: " + path);
    nlohmann::json j;
    f >> j;
    CostModel cm;
    if (j.contains("r_pi4")) cm.r_pi4 = j["r_pi4"].get<double>();
    if (j.contains("s")) cm.s = j["s"].get<double>();
    if (j.contains("cx")) cm.cx = j["cx"].get<double>();
    if (j.contains("h")) cm.h = j["h"].get<double>();
    cm.validate();
    return cm;
}

}  // namespace taco
