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

#include "ventadd/circuit.h"

#include <algorithm>

#include "ventadd/errors.h"

namespace ventadd {

const char *gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "X";
        case GateKind::Z:
            return "Z";
        case GateKind::MeasureXReset:
            return "MeasureXReset";
    }
    return "?";
}

uint32_t RegisterLayout::qubit_count() const {
    uint32_t n = 0;
    for (const auto &s : spans) {
        n = std::max(n, s.start + s.length);
    }
    return n;
}

const Span *RegisterLayout::find(std::string_view name) const {
    for (const auto &s : spans) {
        if (s.name == name) return &s;
    }
    return nullptr;
}

QubitId RegisterLayout::at(std::string_view name, uint32_t index) const {
    const Span *s = find(name);
    if (s == nullptr) {
        throw Error("layout has no span named '" + std::string(name) + "'");
    }
    if (index >= s->length) {
        throw Error("index " + std::to_string(index) + " out of range for span '" +
                    std::string(name) + "'");
    }
    return s->start + index;
}

std::string RegisterLayout::label(QubitId q) const {
    for (const auto &s : spans) {
        if (q >= s.start && q < s.start + s.length) {
            if (s.length == 1) return s.name;
            return s.name + std::to_string(q - s.start);
        }
    }
    throw Error("qubit " + std::to_string(q) + " not covered by layout");
}

uint32_t Circuit::measurement_count() const {
    uint32_t n = 0;
    for (const auto &ins : instructions) {
        n += ins.kind == GateKind::MeasureXReset;
    }
    return n;
}

void canonicalize_controls(std::vector<ControlTerm> &controls) {
    std::stable_sort(controls.begin(), controls.end(),
                     [](const ControlTerm &a, const ControlTerm &b) {
                         if (a.qubits.size() != b.qubits.size()) {
                             return a.qubits.size() < b.qubits.size();
                         }
                         return a.qubits < b.qubits;
                     });
}

void Circuit::append_x(QubitId target, std::vector<ControlTerm> controls,
                       std::optional<ClassicalExpr> condition) {
    canonicalize_controls(controls);
    instructions.push_back({GateKind::X, target, std::move(controls), std::move(condition)});
}

void Circuit::append_z(QubitId target, std::vector<ControlTerm> controls,
                       std::optional<ClassicalExpr> condition) {
    canonicalize_controls(controls);
    instructions.push_back({GateKind::Z, target, std::move(controls), std::move(condition)});
}

uint32_t Circuit::append_measure_x_reset(QubitId target) {
    uint32_t r = record_count++;
    instructions.push_back({GateKind::MeasureXReset, target, {}, {}, r});
    return r;
}

std::vector<std::string> validate(const Circuit &circuit) {
    std::vector<std::string> out;
    uint32_t nq = circuit.qubit_count();

    // Layout: disjoint, contiguous, covering.
    std::vector<int> cover(nq, 0);
    for (const auto &s : circuit.layout.spans) {
        if (s.length == 0) {
            out.push_back("span '" + s.name + "' is empty");
        }
        for (uint32_t q = s.start; q < s.start + s.length; q++) {
            cover[q]++;
        }
    }
    for (uint32_t q = 0; q < nq; q++) {
        if (cover[q] == 0) out.push_back("qubit " + std::to_string(q) + " uncovered by layout");
        if (cover[q] > 1) out.push_back("qubit " + std::to_string(q) + " covered twice");
    }

    uint64_t produced = 0;  // records measured so far
    uint32_t seen_records = 0;
    auto check_expr_records = [&](const ClassicalExpr &e, size_t idx, const char *what) {
        if ((e.record_mask & ~produced) != 0) {
            out.push_back("instruction " + std::to_string(idx) + ": " + what +
                          " references a record before it is measured");
        }
    };

    for (size_t i = 0; i < circuit.instructions.size(); i++) {
        const Instruction &ins = circuit.instructions[i];
        std::string where = "instruction " + std::to_string(i) + ": ";
        if (ins.target >= nq) {
            out.push_back(where + "target out of range");
        }
        if (ins.controls.size() > 2) {
            out.push_back(where + "more than two control slots");
        }
        for (const auto &c : ins.controls) {
            if (c.qubits.empty()) {
                out.push_back(where + "empty control group");
            }
            for (QubitId q : c.qubits) {
                if (q >= nq) out.push_back(where + "control qubit out of range");
                if (q == ins.target) out.push_back(where + "control overlaps target");
            }
            check_expr_records(c.polarity, i, "control polarity");
        }
        if (ins.condition.has_value()) {
            check_expr_records(*ins.condition, i, "classical condition");
        }
        if (ins.kind == GateKind::MeasureXReset) {
            if (!ins.controls.empty() || ins.condition.has_value()) {
                out.push_back(where + "measurement carries controls or a condition");
            }
            if (ins.record == kNoRecord) {
                out.push_back(where + "measurement lacks a record index");
            } else if (ins.record >= 64) {
                out.push_back(where + "record index exceeds the supported 64");
            } else if (produced >> ins.record & 1) {
                out.push_back(where + "duplicate record index");
            } else {
                produced |= uint64_t{1} << ins.record;
                seen_records++;
            }
        } else if (ins.record != kNoRecord) {
            out.push_back(where + "non-measurement carries a record index");
        }
    }

    if (seen_records != circuit.record_count) {
        out.push_back("record_count " + std::to_string(circuit.record_count) +
                      " does not match the " + std::to_string(seen_records) +
                      " measurements present");
    } else if (circuit.record_count > 0 &&
               produced != ((circuit.record_count >= 64 ? ~uint64_t{0}
                                                        : (uint64_t{1} << circuit.record_count) - 1))) {
        out.push_back("record indices are not dense in [0, record_count)");
    }
    if (circuit.offset_width > kMaxWidth) {
        out.push_back("offset width exceeds the supported 63");
    }
    return out;
}

void require_valid(const Circuit &circuit) {
    auto report = validate(circuit);
    if (!report.empty()) {
        std::string msg = "invalid circuit:";
        for (const auto &r : report) {
            msg += "\n  " + r;
        }
        throw Error(msg);
    }
}

Circuit lower_parity_controls(const Circuit &circuit) {
    Circuit out;
    out.layout = circuit.layout;
    out.offset_width = circuit.offset_width;
    out.bound_offset = circuit.bound_offset;
    for (const auto &ins : circuit.instructions) {
        bool has_group = false;
        for (const auto &c : ins.controls) {
            has_group |= c.is_parity_group();
        }
        if (!has_group) {
            out.instructions.push_back(ins);
            continue;
        }
        // Fan parities onto each group's first member, apply, then undo.
        std::vector<Instruction> fan_in;
        Instruction gate = ins;
        for (auto &c : gate.controls) {
            for (size_t i = 1; i < c.qubits.size(); i++) {
                Instruction cx;
                cx.kind = GateKind::X;
                cx.target = c.qubits[0];
                cx.controls = {{{c.qubits[i]}, ClassicalExpr::one()}};
                fan_in.push_back(cx);
            }
            c.qubits.resize(1);
        }
        canonicalize_controls(gate.controls);
        for (const auto &cx : fan_in) out.instructions.push_back(cx);
        out.instructions.push_back(gate);
        for (auto it = fan_in.rbegin(); it != fan_in.rend(); ++it) {
            out.instructions.push_back(*it);
        }
    }
    out.record_count = circuit.record_count;
    return out;
}

}  // namespace ventadd
