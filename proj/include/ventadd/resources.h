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

#ifndef VENTADD_RESOURCES_H
#define VENTADD_RESOURCES_H

#include <cstdint>
#include <optional>
#include <string>

#include "ventadd/circuit.h"
#include "ventadd/simulator.h"

namespace ventadd {

struct ResourceReport {
    uint64_t toffoli_count = 0;
    uint64_t cx_count = 0;
    uint64_t x_count = 0;
    uint64_t z_count = 0;
    uint64_t measure_count = 0;
    uint32_t clean_ancillae = 0;
    uint32_t dirty_ancillae = 0;
    uint32_t depth = 0;
    uint32_t n = 0;
    std::optional<uint64_t> offset;
};

/// Static accounting. Toffolis are counted on the parity-lowered circuit so
/// ZZ-controlled gates cost the same as their CNOT-conjugated forms; all
/// other counts come from a direct scan of the raw instructions. Depth is
/// greedy as-soon-as-possible layering on qubit-overlap conflicts, ignoring
/// classical dependencies.
ResourceReport count(const Circuit &circuit);

struct LinearityReport {
    int64_t min_residual = 0;
    int64_t max_residual = 0;
    int64_t spread() const { return max_residual - min_residual; }
    bool passes(int64_t bound = 16) const { return spread() <= bound; }
};

/// Fits toffoli_count(n) - slope*n over the given widths at the worst-case
/// all-ones offset. Synthesis only; nothing is simulated.
LinearityReport linearity_check(BuilderId id, uint32_t n_min, uint32_t n_max, uint32_t slope);

/// True iff the carry_in qubit never appears as an instruction target.
/// Throws when the layout has no carry_in span.
bool lint_carry_in_control_only(const Circuit &circuit);

/// Aligned-column table of (n, toffoli, clean, dirty, depth) for an n-sweep,
/// with the linearity residual per row.
std::string resource_table(BuilderId id, uint32_t n_min, uint32_t n_max, uint32_t slope);

}  // namespace ventadd

#endif
