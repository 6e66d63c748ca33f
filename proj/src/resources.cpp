// Copyright 2026 The ventadd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ventadd/resources.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "ventadd/errors.h"

namespace ventadd {

ResourceReport count(const Circuit &circuit) {
    require_valid(circuit);
    ResourceReport r;
    r.n = circuit.offset_width;
    r.offset = circuit.bound_offset;
    if (const Span *s = circuit.layout.find("clean")) r.clean_ancillae = s->length;
    if (const Span *s = circuit.layout.find("dirty")) r.dirty_ancillae = s->length;

    Circuit lowered = lower_parity_controls(circuit);
    for (const auto &ins : lowered.instructions) {
        if (ins.kind != GateKind::MeasureXReset && ins.controls.size() == 2) {
            r.toffoli_count++;
        }
    }
    std::vector<uint32_t> ready(circuit.qubit_count(), 0);
    for (const auto &ins : circuit.instructions) {
        switch (ins.kind) {
            case GateKind::X:
                if (ins.controls.size() == 1) {
                    r.cx_count++;
                } else if (ins.controls.empty()) {
                    r.x_count++;
                }
                break;
            case GateKind::Z:
                r.z_count++;
                break;
            case GateKind::MeasureXReset:
                r.measure_count++;
                break;
        }
        uint32_t layer = ready[ins.target];
        for (const auto &ct : ins.controls) {
            for (QubitId q : ct.qubits) {
                layer = std::max(layer, ready[q]);
            }
        }
        layer++;
        ready[ins.target] = layer;
        for (const auto &ct : ins.controls) {
            for (QubitId q : ct.qubits) {
                ready[q] = layer;
            }
        }
        r.depth = std::max(r.depth, layer);
    }
    return r;
}

LinearityReport linearity_check(BuilderId id, uint32_t n_min, uint32_t n_max, uint32_t slope) {
    LinearityReport report;
    bool first = true;
    for (uint32_t n = n_min; n <= n_max; n++) {
        uint64_t all_ones = (uint64_t{1} << n) - 1;
        Circuit c = bind_offset(build_circuit(id, n), OffsetConstant(all_ones, n));
        ResourceReport r = count(c);
        int64_t residual = static_cast<int64_t>(r.toffoli_count) -
                           static_cast<int64_t>(slope) * static_cast<int64_t>(n);
        if (first) {
            report.min_residual = report.max_residual = residual;
            first = false;
        } else {
            report.min_residual = std::min(report.min_residual, residual);
            report.max_residual = std::max(report.max_residual, residual);
        }
    }
    return report;
}

bool lint_carry_in_control_only(const Circuit &circuit) {
    const Span *cin = circuit.layout.find("carry_in");
    if (cin == nullptr) {
        throw Error("layout has no carry_in span");
    }
    for (const auto &ins : circuit.instructions) {
        if (ins.target >= cin->start && ins.target < cin->start + cin->length) {
            return false;
        }
    }
    return true;
}

std::string resource_table(BuilderId id, uint32_t n_min, uint32_t n_max, uint32_t slope) {
    std::ostringstream out;
    out << std::left << std::setw(6) << "n" << std::setw(10) << "toffoli" << std::setw(8)
        << "clean" << std::setw(8) << "dirty" << std::setw(8) << "depth" << std::setw(10)
        << "residual" << "\n";
    for (uint32_t n = n_min; n <= n_max; n++) {
        uint64_t all_ones = (uint64_t{1} << n) - 1;
        Circuit c = bind_offset(build_circuit(id, n), OffsetConstant(all_ones, n));
        ResourceReport r = count(c);
        int64_t residual = static_cast<int64_t>(r.toffoli_count) -
                           static_cast<int64_t>(slope) * static_cast<int64_t>(n);
        out << std::left << std::setw(6) << n << std::setw(10) << r.toffoli_count << std::setw(8)
            << r.clean_ancillae << std::setw(8) << r.dirty_ancillae << std::setw(8) << r.depth
            << std::setw(10) << residual << "\n";
    }
    return out.str();
}

}  // namespace ventadd
