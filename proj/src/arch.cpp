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

#include "taco/arch.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "taco/reduce.hpp"

namespace taco {

void CostModel::validate() const {
    if (r_pi4 <= 0 || s <= 0 || cx <= 0 || h <= 0)
        throw std::invalid_argument("cost model: all cycle costs must be positive");
}

LayoutPlan plan_layout(std::uint32_t n, std::uint32_t compute_blocks) {
    if (compute_blocks < 1) throw std::invalid_argument("plan_layout: need at least one compute block");
    LayoutPlan p;
    p.n = n;
    p.compute_blocks = compute_blocks;
    p.memory_tiles = (3 * static_cast<std::int64_t>(n) + 1) / 2;  // ceil(1.5 n)
    p.total_tiles = p.memory_tiles + 4 * static_cast<std::int64_t>(compute_blocks);
    return p;
}

double baseline_tiles(std::uint32_t n) {
    return 2.0 * n + std::sqrt(8.0 * n) + 1.0;
}

namespace {

bool is_rotation_unit(GateKind k) {
    return is_pi4_rotation(k) || k == GateKind::S || k == GateKind::Sdg;
}

int rotation_units(GateKind k) { return is_pi4_rotation(k) ? 1 : 2; }  // S = two T injections

struct Task {
    enum Kind { Run, Cx, Hadamard, Measure } kind;
    std::uint32_t q0 = 0, q1 = 0;
    int units = 0;         // rotation units for Run
    std::size_t order = 0;  // first gate position
};

std::vector<Task> collect_tasks(const Circuit& c) {
    std::vector<Task> tasks;
    std::vector<int> open(c.num_qubits, -1);
    auto close = [&](std::uint32_t q) { open[q] = -1; };
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& g = c.gates[i];
        if (is_rotation_unit(g.kind)) {
            const auto q = g.qubits[0];
            if (open[q] < 0) {
                open[q] = static_cast<int>(tasks.size());
                tasks.push_back(Task{Task::Run, q, 0, 0, i});
            }
            tasks[open[q]].units += rotation_units(g.kind);
            continue;
        }
        if (is_pauli(g.kind)) continue;  // virtual
        switch (g.kind) {
            case GateKind::CX:
                close(g.qubits[0]);
                close(g.qubits[1]);
                tasks.push_back(Task{Task::Cx, g.qubits[0], g.qubits[1], 0, i});
                break;
            case GateKind::H:
                close(g.qubits[0]);
                tasks.push_back(Task{Task::Hadamard, g.qubits[0], 0, 0, i});
                break;
            case GateKind::MeasureZ:
                close(g.qubits[0]);
                tasks.push_back(Task{Task::Measure, g.qubits[0], 0, 0, i});
                break;
            default:
                throw std::invalid_argument(std::string("schedule: unreduced gate kind: ") +
                                            gate_name(g.kind));
        }
    }
    std::sort(tasks.begin(), tasks.end(),
              [](const Task& a, const Task& b) { return a.order < b.order; });
    return tasks;
}

double serial_cost_of(GateKind k, const CostModel& cm) {
    if (is_pi4_rotation(k)) return cm.r_pi4;
    switch (k) {
        case GateKind::S:
        case GateKind::Sdg:
            return cm.s;
        case GateKind::H:
            return cm.h;
        case GateKind::CX:
            return cm.cx;
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
        case GateKind::MeasureZ:
            return 0.0;
        default:
            throw std::invalid_argument(std::string("serial_time_cost: no cost for gate ") +
                                        gate_name(k));
    }
}

}  // namespace

double serial_time_cost(const Circuit& c, const CostModel& cm) {
    cm.validate();
    double total = 0;
    for (const auto& g : c.gates) total += serial_cost_of(g.kind, cm);
    return total;
}

Schedule schedule(const Circuit& reduced, const LayoutPlan& plan, const CostModel& cm) {
    cm.validate();
    if (reduced.num_qubits != plan.n)
        throw std::invalid_argument("schedule: plan sized for a different qubit count");
    Schedule sched;
    std::vector<double> qubit_ready(reduced.num_qubits, 0.0);
    std::vector<double> block_ready(plan.compute_blocks, 0.0);
    std::vector<bool> flipped(reduced.num_qubits, false);
    double bus_ready = 0.0;

    auto emit = [&sched](double start, double dur, ResourceKind rk, std::uint32_t idx,
                         const char* op) {
        sched.events.push_back(ScheduleEvent{start, dur, rk, idx, op});
        sched.total_cycles = std::max(sched.total_cycles, start + dur);
    };
    // Restore the standard exposed edge before an edge-sensitive use.
    auto unflip = [&](std::uint32_t q) {
        if (!flipped[q]) return;
        emit(qubit_ready[q], 3.0, ResourceKind::MemorySlot, q, "patch_rotation");
        qubit_ready[q] += 3.0;
        flipped[q] = false;
    };

    for (const auto& task : collect_tasks(reduced)) {
        switch (task.kind) {
            case Task::Run: {
                unflip(task.q0);
                std::uint32_t best = 0;
                double best_start = std::max(block_ready[0], qubit_ready[task.q0]);
                for (std::uint32_t j = 1; j < plan.compute_blocks; ++j) {
                    const double s = std::max(block_ready[j], qubit_ready[task.q0]);
                    if (s < best_start) {
                        best = j;
                        best_start = s;
                    }
                }
                emit(best_start, 1.0, ResourceKind::ComputeBlock, best, "transfer_in");
                emit(best_start + 1.0, task.units, ResourceKind::ComputeBlock, best, "rotation_run");
                emit(best_start + 1.0 + task.units, 1.0, ResourceKind::ComputeBlock, best,
                     "transfer_out");
                block_ready[best] = best_start + task.units + 2.0;
                qubit_ready[task.q0] = block_ready[best];
                break;
            }
            case Task::Cx: {
                unflip(task.q0);
                unflip(task.q1);
                const double start =
                    std::max({qubit_ready[task.q0], qubit_ready[task.q1], bus_ready});
                emit(start, cm.cx, ResourceKind::AncillaBus, 0, "cx");
                bus_ready = start + cm.cx;
                qubit_ready[task.q0] = bus_ready;
                qubit_ready[task.q1] = bus_ready;
                break;
            }
            case Task::Hadamard: {
                emit(qubit_ready[task.q0], cm.h, ResourceKind::MemorySlot, task.q0, "h");
                qubit_ready[task.q0] += cm.h;
                flipped[task.q0] = !flipped[task.q0];
                break;
            }
            case Task::Measure: {
                emit(qubit_ready[task.q0], 1.0, ResourceKind::MemorySlot, task.q0, "measure");
                qubit_ready[task.q0] += 1.0;
                break;
            }
        }
    }
    return sched;
}

double critical_path_cycles(const Circuit& c, const CostModel& cm) {
    std::vector<double> ready(c.num_qubits, 0.0);
    std::vector<bool> flipped(c.num_qubits, false);
    auto unflip = [&](std::uint32_t q) {
        if (flipped[q]) {
            ready[q] += 3.0;
            flipped[q] = false;
        }
    };
    for (const auto& task : collect_tasks(c)) {
        switch (task.kind) {
            case Task::Run:
                unflip(task.q0);
                ready[task.q0] += task.units + 2.0;
                break;
            case Task::Cx: {
                unflip(task.q0);
                unflip(task.q1);
                const double s = std::max(ready[task.q0], ready[task.q1]) + cm.cx;
                ready[task.q0] = s;
                ready[task.q1] = s;
                break;
            }
            case Task::Hadamard:
                ready[task.q0] += cm.h;
                flipped[task.q0] = !flipped[task.q0];
                break;
            case Task::Measure:
                ready[task.q0] += 1.0;
                break;
        }
    }
    double total = 0;
    for (const double r : ready) total = std::max(total, r);
    return total;
}

CostReport speedup_report(const Circuit& baseline, const Circuit& reduced, const LayoutPlan& plan,
                          const CostModel& cm) {
    CostReport r;
    r.plan = plan;
    r.baseline_tile_count = baseline_tiles(plan.n);
    r.baseline_serial = serial_time_cost(baseline, cm);
    r.reduced_serial = serial_time_cost(reduced, cm);
    r.serial_ratio = r.reduced_serial > 0 ? r.baseline_serial / r.reduced_serial
                                          : (r.baseline_serial > 0 ? HUGE_VAL : 1.0);
    r.baseline_scheduled = schedule(baseline, plan, cm).total_cycles;
    r.reduced_scheduled = schedule(reduced, plan, cm).total_cycles;
    r.scheduled_ratio = r.reduced_scheduled > 0 ? r.baseline_scheduled / r.reduced_scheduled
                                                : (r.baseline_scheduled > 0 ? HUGE_VAL : 1.0);
    const ReductionStats st = clifford_reduction_stats(baseline, reduced);
    r.h_before = st.h_before;
    r.h_after = st.h_after;
    r.s_before = st.s_before;
    r.s_after = st.s_after;
    r.h_reduction = st.h_reduction;
    r.s_reduction = st.s_reduction;
    r.clifford_reduction = st.clifford_reduction;
    r.locality_ge10 = rotation_locality(reduced);
    return r;
}

}  // namespace taco
