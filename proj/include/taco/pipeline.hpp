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

#include "taco/arch.hpp"
#include "taco/circuit.hpp"
#include "taco/pbc.hpp"
#include "taco/reduce.hpp"
#include "taco/synthesize.hpp"

namespace taco {

struct PipelineConfig {
    double epsilon = 1e-3;
    SynthBackend backend = SynthBackend::Search;
    int search_tcount_cap = 24;
    std::string synth_file;
    double tau_angle = 1e-9;
    CostModel cost_model;
    std::uint32_t compute_blocks = 1;
    bool verify = false;
};

struct PipelineResult {
    Circuit input;
    Circuit decomposed;
    Circuit transformed;
    Circuit clifford_t;  // post-synthesis baseline
    Circuit reduced;
    PauliFrame frame{0};
    ReduceResult reduce_detail;
    ReductionStats reduction;
    CostReport cost;
    Schedule reduced_schedule;
    PbcProgram pbc;
    ParallelismStats taco_parallelism;
    ParallelismStats pbc_parallelism;
    std::int64_t rz_before = 0;       // nontrivial RZ in the decomposed circuit
    std::int64_t rz_after = 0;        // after the dynamic transformation
    std::int64_t synthesized_rz = 0;  // approximate syntheses performed
    bool verify_ran = false;
    bool verify_ok = true;
    double verify_metric = 0;
    double verify_budget = 0;
};

/// Lowers a transformed circuit to pure Clifford+T (+ CX/measure):
/// pi/4-exact angles become exact words, everything else goes through
/// synthesize_rz; RX/RY/U3 are Euler-rewritten first. `synth_count`
/// accumulates the number of approximate syntheses.
Circuit synthesize_circuit(const Circuit& transformed, const PipelineConfig& cfg,
                           std::int64_t* synth_count = nullptr);

/// decompose -> transform -> synthesize -> reduce -> schedule -> PBC
/// comparison, with optional dense-unitary verification for n <= 10.
PipelineResult run_pipeline(const Circuit& input, const PipelineConfig& cfg);

/// The versioned JSON report (schema 1) for a pipeline result. Floats
/// are rounded to nine decimals so identical runs serialize identically.
std::string report_json(const PipelineResult& r, const PipelineConfig& cfg);

std::string schedule_json(const Schedule& s);
std::string schedule_gantt(const Schedule& s);
std::string pbc_json(const PbcProgram& p, const ParallelismStats& taco,
                     const ParallelismStats& pbc);
std::string counts_json(const Circuit& c);

/// Reads a cost model from a JSON file {"r_pi4":..,"s":..,"cx":..,"h":..}.
CostModel load_cost_model(const std::string& path);

}  // namespace taco
