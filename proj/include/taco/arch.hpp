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

#include <cstdint>
#include <string>
#include <vector>

#include "taco/circuit.hpp"

namespace taco {

/// Cycle costs per logical gate kind. Defaults follow the evaluation
/// table (H averaged to 2.5); h is configurable because the sources
/// price it anywhere from 1 to 4 cycles.
struct CostModel {
    double r_pi4 = 2.0;
    double s = 2.0;
    double cx = 2.0;
    double h = 2.5;
    double h_min = 1.0, h_max = 4.0;

    void validate() const;
};

/// Tile plan: a compact memory block of ceil(1.5 n) tiles (qubits on rows
/// 1 and 3, ancilla bus on row 2) plus m compute blocks of 4 tiles each.
struct LayoutPlan {
    std::uint32_t n = 0;
    std::uint32_t compute_blocks = 1;
    std::int64_t memory_tiles = 0;
    std::int64_t total_tiles = 0;
};

LayoutPlan plan_layout(std::uint32_t n, std::uint32_t compute_blocks = 1);

/// Tile count of the prior design this layout is compared against:
/// 2n + sqrt(8n) + 1.
double baseline_tiles(std::uint32_t n);

/// Serial sum of per-gate cycle costs; Paulis and measurements are free.
/// Rejects kinds without a cost (unsynthesized rotations, multi-qubit
/// kinds other than CX).
double serial_time_cost(const Circuit& c, const CostModel& cm);

enum class ResourceKind : std::uint8_t { MemorySlot, AncillaBus, ComputeBlock };

struct ScheduleEvent {
    double start = 0;
    double duration = 0;
    ResourceKind resource = ResourceKind::MemorySlot;
    std::uint32_t resource_index = 0;
    std::string op;

    double end() const { return start + duration; }
};

struct Schedule {
    std::vector<ScheduleEvent> events;
    double total_cycles = 0;
};

/// Greedy list scheduler for reduced circuits over the layout plan:
///   - maximal same-qubit runs of pi/4 rotations (S/Sdg fold in as two
///     rotations each) execute on a free compute block, one cycle per
///     rotation plus one-cycle transfers in and out;
///   - CX gates serialize on the single ancilla bus;
///   - residual H executes on the qubit's memory slot and flips its
///     exposed edge; a later CX or compute transfer on a flipped slot
///     pays a 3-cycle patch rotation first;
///   - measurements take one cycle on the slot.
/// Tasks are placed in program order at the earliest start compatible
/// with per-qubit dependencies and resource availability (lowest-index
/// free compute block first).
Schedule schedule(const Circuit& reduced, const LayoutPlan& plan, const CostModel& cm);

struct ParallelismStats;

/// Aggregate comparison of a baseline Clifford+T circuit against its
/// reduced form: serial and scheduled cycle totals with speedup ratios,
/// tile counts, and reduction percentages.
struct CostReport {
    double baseline_serial = 0;
    double reduced_serial = 0;
    double serial_ratio = 0;
    double baseline_scheduled = 0;
    double reduced_scheduled = 0;
    double scheduled_ratio = 0;
    LayoutPlan plan;
    double baseline_tile_count = 0;
    std::int64_t h_before = 0, h_after = 0;
    std::int64_t s_before = 0, s_after = 0;
    double h_reduction = 0, s_reduction = 0, clifford_reduction = 0;
    double locality_ge10 = 0;
};

CostReport speedup_report(const Circuit& baseline, const Circuit& reduced, const LayoutPlan& plan,
                          const CostModel& cm);

/// Longest-dependency-path lower bound for a schedule of `c` (resource
/// contention ignored), using the same task durations as `schedule`.
double critical_path_cycles(const Circuit& c, const CostModel& cm);

}  // namespace taco
