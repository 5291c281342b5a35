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

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "taco/decompose.hpp"
#include "taco/generators.hpp"
#include "taco/pipeline.hpp"
#include "taco/qasm.hpp"
#include "taco/transform.hpp"
#include "taco/verify.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitBackend = 3;
constexpr int kExitVerify = 4;

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

taco::Circuit load_input(const std::string& input, const std::string& gen) {
    if (!gen.empty()) return taco::make_from_spec(gen);
    if (input.empty()) throw std::runtime_error("no input file or --gen spec given");
    return taco::parse_qasm(read_file(input));
}

taco::SynthBackend backend_of(const std::string& name) {
    if (name == "exact") return taco::SynthBackend::Exact;
    if (name == "search") return taco::SynthBackend::Search;
    if (name == "external") return taco::SynthBackend::External;
    throw CLI::ValidationError("--backend", "expected exact|search|external");
}

struct CommonOpts {
    std::string input, gen;
    double epsilon = 1e-3;
    std::string backend = "search";
    std::string synth_file;
    std::string cost_model_file;
    std::uint32_t compute_blocks = 1;
    double tau = 1e-9;
    int search_cap = 24;
};

taco::PipelineConfig config_of(const CommonOpts& o) {
    taco::PipelineConfig cfg;
    cfg.epsilon = o.epsilon;
    cfg.backend = backend_of(o.backend);
    cfg.synth_file = o.synth_file;
    cfg.tau_angle = o.tau;
    cfg.search_tcount_cap = o.search_cap;
    cfg.compute_blocks = o.compute_blocks;
    if (!o.cost_model_file.empty()) cfg.cost_model = taco::load_cost_model(o.cost_model_file);
    return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
    if (with_input) {
        cmd->add_option("input", o.input, "input OpenQASM 2.0 file");
        cmd->add_option("--gen", o.gen, "generator spec: qft:N | qpe:N:seed | ising:N:steps | wstate:N");
    }
    cmd->add_option("--epsilon", o.epsilon, "synthesis tolerance");
    cmd->add_option("--backend", o.backend, "synthesis backend: exact|search|external");
    cmd->add_option("--synth-file", o.synth_file,
                    "sidecar synthesis file (fallback: TACO_SYNTH_FILE)");
    cmd->add_option("--cost-model", o.cost_model_file, "cost model JSON file");
    cmd->add_option("--compute-blocks", o.compute_blocks, "number of compute blocks");
    cmd->add_option("--tau", o.tau, "angle canonicalization tolerance (radians)");
    cmd->add_option("--search-cap", o.search_cap, "search backend T-count cap");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"taco: FTQC transpilation, Clifford reduction and cost estimation"};
    app.require_subcommand(1);

    CommonOpts opts;
    bool verify_flag = false;
    std::string out_path, emit_reduced, emit_pbc, emit_schedule, report_path;
    std::string angle_text;
    std::string other_file;
    double tol = 1e-9;

    auto* run = app.add_subcommand("run", "full pipeline with report emission");
    add_common(run, opts);
    run->add_flag("--verify", verify_flag, "check unitary equivalence (n <= 10)");
    run->add_option("--emit-reduced", emit_reduced, "write the reduced circuit as QASM");
    run->add_option("--emit-pbc", emit_pbc, "write the PBC program as JSON");
    run->add_option("--emit-schedule", emit_schedule, "write the schedule as JSON");
    run->add_option("--report", report_path, "write the cost report JSON (default: stdout)");

    auto* stats = app.add_subcommand("stats", "gate counts as JSON");
    add_common(stats, opts);

    auto* dec = app.add_subcommand("decompose", "rewrite to CX + single-qubit gates");
    add_common(dec, opts);
    dec->add_option("-o,--output", out_path, "output QASM path (default: stdout)");

    auto* tra = app.add_subcommand("transform", "decompose, then minimize nontrivial RZ gates");
    add_common(tra, opts);
    tra->add_option("-o,--output", out_path, "output QASM path (default: stdout)");

    auto* syn = app.add_subcommand("synth", "synthesize one RZ angle to an MA word");
    syn->add_option("angle", angle_text, "angle expression, e.g. pi/8 or 0.3")->required();
    add_common(syn, opts, false);

    auto* red = app.add_subcommand("reduce", "Clifford reduction of a Clifford+T circuit");
    add_common(red, opts);
    red->add_option("-o,--output", out_path, "output QASM path (default: stdout)");

    auto* sch = app.add_subcommand("schedule", "schedule a reduced circuit on the tile layout");
    add_common(sch, opts);
    sch->add_option("-o,--output", out_path, "output JSON path (default: stdout)");
    bool gantt = false;
    sch->add_flag("--gantt", gantt, "plain-text event dump instead of JSON");

    auto* pbc_cmd = app.add_subcommand("pbc", "Pauli-based form and parallelism stats");
    add_common(pbc_cmd, opts);
    pbc_cmd->add_option("-o,--output", out_path, "output JSON path (default: stdout)");

    auto* ver = app.add_subcommand("verify", "projective equivalence of two circuits");
    add_common(ver, opts);
    ver->add_option("against", other_file, "second QASM file")->required();
    ver->add_option("--tol", tol, "equivalence tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        taco::set_angle_tolerance(opts.tau);
        auto emit_or_print = [&](const std::string& text) {
            if (out_path.empty())
                std::cout << text;
            else
                write_file(out_path, text);
        };

        if (run->parsed()) {
            auto cfg = config_of(opts);
            cfg.verify = verify_flag;
            const auto input = load_input(opts.input, opts.gen);
            const auto result = taco::run_pipeline(input, cfg);
            if (!emit_reduced.empty()) write_file(emit_reduced, taco::emit_qasm(result.reduced));
            if (!emit_pbc.empty())
                write_file(emit_pbc, taco::pbc_json(result.pbc, result.taco_parallelism,
                                                    result.pbc_parallelism));
            if (!emit_schedule.empty())
                write_file(emit_schedule, taco::schedule_json(result.reduced_schedule));
            const std::string report = taco::report_json(result, cfg);
            if (report_path.empty())
                std::cout << report;
            else
                write_file(report_path, report);
            if (result.verify_ran && !result.verify_ok) {
                std::cerr << "verification failed: metric " << result.verify_metric
                          << " exceeds budget " << result.verify_budget << "\n";
                return kExitVerify;
            }
            return 0;
        }
        if (stats->parsed()) {
            std::cout << taco::counts_json(load_input(opts.input, opts.gen));
            return 0;
        }
        if (dec->parsed()) {
            emit_or_print(taco::emit_qasm(taco::decompose_to_cx_1q(load_input(opts.input, opts.gen))));
            return 0;
        }
        if (tra->parsed()) {
            const auto c = taco::decompose_to_cx_1q(load_input(opts.input, opts.gen));
            emit_or_print(taco::emit_qasm(taco::transform(c)));
            return 0;
        }
        if (syn->parsed()) {
            taco::SynthOptions so;
            so.backend = backend_of(opts.backend);
            so.search_tcount_cap = opts.search_cap;
            so.sidecar_path = opts.synth_file;
            const taco::Angle theta = taco::parse_angle_expr(angle_text);
            const taco::MAWord w = taco::synthesize_rz(theta, opts.epsilon, so);
            const double d = taco::synth_distance(w.to_exact().to_unitary2(),
                                                  taco::rz_matrix(theta.radians()));
            std::cout << w.to_letters() << "\n";
            std::cerr << "t_count " << w.t_count() << " distance " << d << "\n";
            return 0;
        }
        if (red->parsed()) {
            const auto res = taco::reduce_circuit(load_input(opts.input, opts.gen));
            emit_or_print(taco::emit_qasm(res.circuit));
            std::cerr << "frame " << res.frame.to_string() << "\n";
            return 0;
        }
        if (sch->parsed()) {
            auto cfg = config_of(opts);
            const auto c = load_input(opts.input, opts.gen);
            const auto s = taco::schedule(c, taco::plan_layout(c.num_qubits, cfg.compute_blocks),
                                          cfg.cost_model);
            emit_or_print(gantt ? taco::schedule_gantt(s) : taco::schedule_json(s));
            return 0;
        }
        if (pbc_cmd->parsed()) {
            const auto c = load_input(opts.input, opts.gen);
            const auto prog = taco::to_pbc(c);
            std::vector<std::vector<std::uint32_t>> supports;
            for (const auto& rot : prog.rotations) supports.push_back(rot.support());
            const auto pbc_stats = taco::parallelism_stats(taco::parallelism_layers(supports));
            const auto taco_stats =
                taco::parallelism_stats(taco::parallelism_layers(taco::gate_supports(c)));
            emit_or_print(taco::pbc_json(prog, taco_stats, pbc_stats));
            return 0;
        }
        if (ver->parsed()) {
            const auto a = taco::unitary_of(load_input(opts.input, opts.gen));
            const auto b = taco::unitary_of(taco::parse_qasm(read_file(other_file)));
            const double metric = taco::phase_distance(a, b);
            std::cout << "metric " << metric << " tol " << tol << "\n";
            return metric <= tol ? 0 : kExitVerify;
        }
    } catch (const taco::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const taco::SynthError& e) {
        std::cerr << "synthesis error: " << e.what() << "\n";
        return kExitBackend;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
