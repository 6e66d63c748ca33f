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

#ifndef VENTADD_CIRCUIT_H
#define VENTADD_CIRCUIT_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ventadd/expr.h"

namespace ventadd {

using QubitId = uint32_t;

constexpr uint32_t kNoRecord = UINT32_MAX;

enum class GateKind : uint8_t {
    X,
    Z,
    MeasureXReset,
};

const char *gate_kind_name(GateKind kind);

/// One control slot of a gate. A single qubit is the ordinary case; two or
/// more qubits form a parity group: the slot is satisfied when the XOR of the
/// member values equals the polarity expression. Polarity "1" is a plain
/// control; expressions over offset bits encode bit-inverted controls.
struct ControlTerm {
    std::vector<QubitId> qubits;
    ClassicalExpr polarity = ClassicalExpr::one();

    bool is_parity_group() const { return qubits.size() > 1; }
    bool operator==(const ControlTerm &other) const = default;
};

/// A gate application, measurement included. Instructions carry at most two
/// control slots (a Toffoli is the largest primitive), an optional classical
/// condition evaluated against records and offset bits, and a record index
/// when the kind is MeasureXReset.
struct Instruction {
    GateKind kind = GateKind::X;
    QubitId target = 0;
    std::vector<ControlTerm> controls;
    std::optional<ClassicalExpr> condition;
    uint32_t record = kNoRecord;

    bool operator==(const Instruction &other) const = default;
};

struct Span {
    std::string name;
    QubitId start = 0;
    uint32_t length = 0;

    bool operator==(const Span &other) const = default;
};

/// Named, contiguous, disjoint spans covering [0, qubit_count).
struct RegisterLayout {
    std::vector<Span> spans;

    uint32_t qubit_count() const;
    const Span *find(std::string_view name) const;
    bool has(std::string_view name) const { return find(name) != nullptr; }
    /// Qubit `index` within the named span. Throws if absent or out of range.
    QubitId at(std::string_view name, uint32_t index) const;
    /// Span name and offset for a qubit, e.g. "target3". Throws if uncovered.
    std::string label(QubitId q) const;

    bool operator==(const RegisterLayout &other) const = default;
};

struct Circuit {
    RegisterLayout layout;
    std::vector<Instruction> instructions;
    uint32_t record_count = 0;
    uint32_t offset_width = 0;
    /// Present once bind_offset has specialized the circuit.
    std::optional<uint64_t> bound_offset;

    bool operator==(const Circuit &other) const = default;

    uint32_t qubit_count() const { return layout.qubit_count(); }
    uint32_t measurement_count() const;

    // Append helpers used by the builders. Control slots are put in canonical
    // order (singles before groups, then by members) so structural equality
    // is insensitive to emission order.
    void append_x(QubitId target, std::vector<ControlTerm> controls = {},
                  std::optional<ClassicalExpr> condition = {});
    void append_z(QubitId target, std::vector<ControlTerm> controls = {},
                  std::optional<ClassicalExpr> condition = {});
    /// X-basis measurement fused with reset to |0>. Returns the record index.
    uint32_t append_measure_x_reset(QubitId target);
};

void canonicalize_controls(std::vector<ControlTerm> &controls);

/// Checks every structural invariant and returns the violations found
/// (empty means valid): layout coverage, control arity, record causality,
/// record density, qubit ranges, measurement shape.
std::vector<std::string> validate(const Circuit &circuit);

/// Throws Error listing the violations unless validate() comes back empty.
void require_valid(const Circuit &circuit);

/// Rewrites every parity-control group into CNOT conjugation onto the
/// group's first qubit: fan-in CNOTs before the gate, undone after. The
/// result has single-qubit control slots only and is exactly equivalent,
/// measurement semantics included.
Circuit lower_parity_controls(const Circuit &circuit);

}  // namespace ventadd

#endif
