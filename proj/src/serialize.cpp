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

#include "ventadd/serialize.h"

#include <json.hpp>

#include "ventadd/errors.h"

namespace ventadd {

using nlohmann::json;

namespace {

constexpr int kFormatVersion = 1;

json instruction_to_json(const Instruction &ins) {
    json j;
    j["kind"] = gate_kind_name(ins.kind);
    j["target"] = ins.target;
    json singles = json::array();
    json groups = json::array();
    for (const auto &ct : ins.controls) {
        if (ct.is_parity_group()) {
            groups.push_back({{"qubits", ct.qubits}, {"pol", ct.polarity.str()}});
        } else {
            singles.push_back({{"qubit", ct.qubits[0]}, {"pol", ct.polarity.str()}});
        }
    }
    if (!singles.empty()) j["qcontrols"] = singles;
    if (!groups.empty()) j["parity_groups"] = groups;
    if (ins.condition.has_value()) j["cond"] = ins.condition->str();
    if (ins.record != kNoRecord) j["record"] = ins.record;
    return j;
}

Instruction instruction_from_json(const json &j) {
    Instruction ins;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "X") {
        ins.kind = GateKind::X;
    } else if (kind == "Z") {
        ins.kind = GateKind::Z;
    } else if (kind == "MeasureXReset") {
        ins.kind = GateKind::MeasureXReset;
    } else {
        throw SerializationError("unknown gate kind: " + kind);
    }
    ins.target = j.at("target").get<QubitId>();
    if (j.contains("qcontrols")) {
        for (const auto &q : j.at("qcontrols")) {
            ins.controls.push_back({{q.at("qubit").get<QubitId>()},
                                    ClassicalExpr::parse(q.at("pol").get<std::string>())});
        }
    }
    if (j.contains("parity_groups")) {
        for (const auto &g : j.at("parity_groups")) {
            ins.controls.push_back({g.at("qubits").get<std::vector<QubitId>>(),
                                    ClassicalExpr::parse(g.at("pol").get<std::string>())});
        }
    }
    canonicalize_controls(ins.controls);
    if (j.contains("cond")) {
        ins.condition = ClassicalExpr::parse(j.at("cond").get<std::string>());
    }
    if (j.contains("record")) {
        ins.record = j.at("record").get<uint32_t>();
    }
    return ins;
}

}  // namespace

std::string circuit_to_text(const Circuit &circuit) {
    json j;
    j["version"] = kFormatVersion;
    j["n"] = circuit.offset_width;
    if (circuit.bound_offset.has_value()) {
        j["offset"] = *circuit.bound_offset;
    }
    j["record_count"] = circuit.record_count;
    j["layout"] = json::array();
    for (const auto &s : circuit.layout.spans) {
        j["layout"].push_back({{"name", s.name}, {"start", s.start}, {"len", s.length}});
    }
    j["instructions"] = json::array();
    for (const auto &ins : circuit.instructions) {
        j["instructions"].push_back(instruction_to_json(ins));
    }
    return j.dump(2) + "\n";
}

Circuit circuit_from_text(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw SerializationError(std::string("bad circuit document: ") + e.what());
    }
    try {
        if (j.at("version").get<int>() != kFormatVersion) {
            throw SerializationError("unsupported format version");
        }
        Circuit c;
        c.offset_width = j.at("n").get<uint32_t>();
        if (j.contains("offset")) {
            c.bound_offset = j.at("offset").get<uint64_t>();
        }
        c.record_count = j.at("record_count").get<uint32_t>();
        for (const auto &s : j.at("layout")) {
            c.layout.spans.push_back({s.at("name").get<std::string>(),
                                      s.at("start").get<QubitId>(),
                                      s.at("len").get<uint32_t>()});
        }
        for (const auto &ins : j.at("instructions")) {
            c.instructions.push_back(instruction_from_json(ins));
        }
        return c;
    } catch (const json::exception &e) {
        throw SerializationError(std::string("bad circuit document: ") + e.what());
    }
}

std::string render_diagram(const Circuit &circuit) {
    uint32_t nq = circuit.qubit_count();
    std::vector<std::string> labels(nq);
    size_t label_width = 0;
    for (uint32_t q = 0; q < nq; q++) {
        labels[q] = circuit.layout.label(q);
        label_width = std::max(label_width, labels[q].size());
    }
    std::vector<std::string> rows(nq);
    for (const auto &ins : circuit.instructions) {
        std::vector<std::string> cells(nq);
        std::string t;
        switch (ins.kind) {
            case GateKind::X:
                t = "X";
                break;
            case GateKind::Z:
                t = "Z";
                break;
            case GateKind::MeasureXReset:
                t = "M" + std::to_string(ins.record);
                break;
        }
        if (ins.condition.has_value()) {
            t += "?" + ins.condition->str();
        }
        cells[ins.target] = t;
        for (const auto &ct : ins.controls) {
            if (ct.is_parity_group()) {
                for (size_t i = 0; i < ct.qubits.size(); i++) {
                    cells[ct.qubits[i]] =
                        i == 0 && !ct.polarity.is_one() ? "#(" + ct.polarity.str() + ")" : "#";
                }
            } else {
                QubitId q = ct.qubits[0];
                if (ct.polarity.is_one()) {
                    cells[q] = "@";
                } else if (ct.polarity.is_zero()) {
                    cells[q] = "o";
                } else {
                    cells[q] = "@(" + ct.polarity.str() + ")";
                }
            }
        }
        size_t width = 1;
        for (const auto &c : cells) {
            width = std::max(width, c.size());
        }
        for (uint32_t q = 0; q < nq; q++) {
            std::string cell = cells[q];
            rows[q] += '-';
            rows[q] += cell;
            rows[q].append(width - cell.size() + 1, '-');
        }
    }
    std::string out;
    for (uint32_t q = 0; q < nq; q++) {
        out.append(label_width - labels[q].size(), ' ');
        out += labels[q];
        out += ": ";
        out += rows[q];
        out += '\n';
    }
    return out;
}

}  // namespace ventadd
