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

#include "ventadd/builders.h"

#include <algorithm>
#include <bit>

#include "ventadd/errors.h"

namespace ventadd {

namespace {

ClassicalExpr d_bit(uint32_t k) {
    return ClassicalExpr::offset_bit(k);
}

ControlTerm plain(QubitId q) {
    return {{q}, ClassicalExpr::one()};
}

ControlTerm dressed(QubitId q, const ClassicalExpr &polarity) {
    return {{q}, polarity};
}

/// Carry-in wire of a sub-adder: either a live qubit or a classical bit.
struct CarryIn {
    std::optional<QubitId> qubit;
    bool constant = false;

    static CarryIn live(QubitId q) { return {q, false}; }
    static CarryIn fixed(bool b) { return {{}, b}; }
};

/// Emits the vented ripple-carry addition of the symbolic offset into
/// `target`. Stage k computes carry c_{k+1} from c_k (held on one of the two
/// clean ancillae, alternating) and finishes sum bit k; the c_k holder is
/// then deleted by X-basis measurement. The carry arriving at a stage is
/// contaminated by the previous offset bit (the Toffoli produces
/// c_{k+1} ^ d_k), so each stage starts by clearing d_{k-1} with a
/// classically-controlled X.
///
///   dlo          global offset-bit index of target[0]
///   merged_into  dirty qubits receiving the vented carries as they appear
///   carry_out    qubit to receive the final carry c_w; when absent the last
///                carry is folded directly into the top target bit
void emit_streaming(Circuit &c, const std::vector<QubitId> &target, CarryIn cin,
                    QubitId clean0, QubitId clean1, uint32_t dlo,
                    const std::vector<QubitId> *merged_into, std::optional<QubitId> carry_out,
                    VentLedger *ledger) {
    uint32_t w = static_cast<uint32_t>(target.size());
    for (uint32_t k = 0; k < w; k++) {
        c.append_x(target[k], {}, d_bit(dlo + k));
    }
    uint32_t stages = carry_out.has_value() ? w : w - 1;
    QubitId cleans[2] = {clean0, clean1};
    uint32_t clean_idx = 1;  // matches the figures: first carry lands on clean1
    QubitId holder = 0;      // qubit holding c_k ^ d_{k-1} entering stage k
    for (uint32_t k = 0; k < stages; k++) {
        bool last = k + 1 == stages;
        QubitId b;
        if (last) {
            b = carry_out.has_value() ? *carry_out : target[w - 1];
        } else {
            b = cleans[clean_idx];
            clean_idx ^= 1;
        }
        if (k == 0) {
            if (cin.qubit.has_value()) {
                c.append_x(b, {dressed(*cin.qubit, ClassicalExpr::one() ^ d_bit(dlo)),
                               plain(target[0])});
                c.append_x(target[0], {plain(*cin.qubit)});
            } else {
                ClassicalExpr gate_on{cin.constant, 0, 0};
                c.append_x(b, {plain(target[0])}, gate_on ^ d_bit(dlo));
                if (cin.constant) {
                    c.append_x(target[0]);
                }
            }
        } else {
            c.append_x(holder, {}, d_bit(dlo + k - 1));  // holder -> exact c_k
            c.append_x(b, {dressed(holder, ClassicalExpr::one() ^ d_bit(dlo + k)),
                           plain(target[k])});
            c.append_x(target[k], {plain(holder)});
            if (merged_into != nullptr) {
                c.append_x((*merged_into)[k - 1], {plain(holder)});
            }
            uint32_t r = c.append_measure_x_reset(holder);
            if (ledger != nullptr) {
                ledger->entries.push_back({r, k});
            }
        }
        holder = b;
    }
    if (carry_out.has_value()) {
        c.append_x(*carry_out, {}, d_bit(dlo + w - 1));
    } else {
        c.append_x(target[w - 1], {}, d_bit(dlo + w - 2));
    }
}

/// Emits dirty[i] ^= carry(target, d, carry_in)_{i+1} for i in [0, count).
/// With `complement` set the carries are those of the bitwise-complemented
/// target, which by the carry-reproduction identity equal the carries of the
/// addition that produced it. A down sweep of Toffolis seeds partial
/// products; the up sweep then fixes each dirty qubit in turn, the control
/// polarities absorbing the offset-bit dressings.
void emit_carry_xor(Circuit &c, const std::vector<QubitId> &target, CarryIn cin,
                    const std::vector<QubitId> &dirty, uint32_t dlo, uint32_t count,
                    bool complement) {
    if (count == 0) {
        return;
    }
    ClassicalExpr flip = complement ? ClassicalExpr::one() : ClassicalExpr::zero();
    for (uint32_t k = count - 1; k >= 1; k--) {
        c.append_x(dirty[k], {plain(dirty[k - 1]),
                              dressed(target[k], ClassicalExpr::one() ^ d_bit(dlo + k) ^ flip)});
    }
    if (cin.qubit.has_value()) {
        c.append_x(dirty[0], {dressed(*cin.qubit, ClassicalExpr::one() ^ d_bit(dlo)),
                              dressed(target[0], ClassicalExpr::one() ^ d_bit(dlo) ^ flip)});
    } else {
        ClassicalExpr gate_on{cin.constant, 0, 0};
        c.append_x(dirty[0], {dressed(target[0], ClassicalExpr::one() ^ d_bit(dlo) ^ flip)},
                   gate_on ^ d_bit(dlo));
    }
    c.append_x(dirty[0], {}, d_bit(dlo));
    for (uint32_t k = 1; k < count; k++) {
        c.append_x(dirty[k], {dressed(dirty[k - 1], ClassicalExpr::one() ^ d_bit(dlo + k)),
                              dressed(target[k], ClassicalExpr::one() ^ d_bit(dlo + k) ^ flip)});
        c.append_x(dirty[k], {}, d_bit(dlo + k));
    }
}

std::vector<QubitId> span_qubits(const Circuit &c, std::string_view name) {
    const Span *s = c.layout.find(name);
    std::vector<QubitId> out(s->length);
    for (uint32_t i = 0; i < s->length; i++) {
        out[i] = s->start + i;
    }
    return out;
}

void check_min_width(uint32_t n, uint32_t min_n, const char *what) {
    if (n < min_n) {
        throw WidthError(std::string(what) + " requires width >= " + std::to_string(min_n) +
                         ", got " + std::to_string(n));
    }
    if (n > kMaxWidth) {
        throw WidthError("width exceeds the supported 63");
    }
}

}  // namespace

StreamingAdder build_streaming_adder(uint32_t n, const StreamingOptions &options) {
    check_min_width(n, 2, "streaming adder");
    StreamingAdder result;
    Circuit &c = result.circuit;
    c.offset_width = n;
    bool live_cin = !options.carry_in_const.has_value();
    uint32_t nd = options.merged_carry_xor ? n - 2 : 0;
    QubitId next = 0;
    c.layout.spans.push_back({"clean", next, 2});
    next += 2;
    if (nd > 0) {
        c.layout.spans.push_back({"dirty", next, nd});
        next += nd;
    }
    QubitId cin_q = next;
    if (live_cin) {
        c.layout.spans.push_back({"carry_in", next, 1});
        next += 1;
    }
    c.layout.spans.push_back({"target", next, n});

    std::vector<QubitId> target = span_qubits(c, "target");
    std::vector<QubitId> dirty = nd > 0 ? span_qubits(c, "dirty") : std::vector<QubitId>{};
    CarryIn cin = live_cin ? CarryIn::live(cin_q) : CarryIn::fixed(*options.carry_in_const);
    emit_streaming(c, target, cin, 0, 1, 0, nd > 0 ? &dirty : nullptr, {}, &result.ledger);
    return result;
}

Circuit build_carry_xor(uint32_t n, const AdderOptions &options) {
    check_min_width(n, 2, "carry-xor");
    Circuit c;
    c.offset_width = n;
    bool live_cin = !options.carry_in_const.has_value();
    QubitId next = 0;
    c.layout.spans.push_back({"dirty", next, n - 1});
    next += n - 1;
    QubitId cin_q = next;
    if (live_cin) {
        c.layout.spans.push_back({"carry_in", next, 1});
        next += 1;
    }
    c.layout.spans.push_back({"target", next, n});

    CarryIn cin = live_cin ? CarryIn::live(cin_q) : CarryIn::fixed(*options.carry_in_const);
    emit_carry_xor(c, span_qubits(c, "target"), cin, span_qubits(c, "dirty"), 0, n - 1, false);
    return c;
}

Circuit build_adder_2clean_ndirty(uint32_t n, const AdderOptions &options) {
    check_min_width(n, 3, "2-clean n-dirty adder");
    Circuit c;
    c.offset_width = n;
    bool live_cin = !options.carry_in_const.has_value();
    QubitId next = 0;
    c.layout.spans.push_back({"clean", next, 2});
    next += 2;
    c.layout.spans.push_back({"dirty", next, n - 2});
    next += n - 2;
    QubitId cin_q = next;
    if (live_cin) {
        c.layout.spans.push_back({"carry_in", next, 1});
        next += 1;
    }
    c.layout.spans.push_back({"target", next, n});

    std::vector<QubitId> target = span_qubits(c, "target");
    std::vector<QubitId> dirty = span_qubits(c, "dirty");
    CarryIn cin = live_cin ? CarryIn::live(cin_q) : CarryIn::fixed(*options.carry_in_const);

    // Vented addition, xoring each carry c_{k+1} into dirty[k] as it runs.
    VentLedger ledger;
    emit_streaming(c, target, cin, 0, 1, 0, &dirty, {}, &ledger);
    // Z(dirty[k]) on record 1, carry-xor of the complemented sum, Z again:
    // each sandwich phases by the vented carry, cancelling the vent, and the
    // second xor returns the dirty qubits to their input values.
    for (const auto &e : ledger.entries) {
        c.append_z(dirty[e.carry_bit_index - 1], {}, ClassicalExpr::record(e.record_index));
    }
    emit_carry_xor(c, target, cin, dirty, 0, n - 2, true);
    for (const auto &e : ledger.entries) {
        c.append_z(dirty[e.carry_bit_index - 1], {}, ClassicalExpr::record(e.record_index));
    }
    return c;
}

Circuit build_adder_3clean(uint32_t n, const AdderOptions &options) {
    check_min_width(n, 4, "3-clean adder");
    uint32_t h = (n + 1) / 2;  // bottom half width
    uint32_t m = n - h;        // top half width
    Circuit c;
    c.offset_width = n;
    bool live_cin = !options.carry_in_const.has_value();
    QubitId next = 0;
    c.layout.spans.push_back({"clean", next, 3});
    next += 3;
    QubitId cin_q = next;
    if (live_cin) {
        c.layout.spans.push_back({"carry_in", next, 1});
        next += 1;
    }
    c.layout.spans.push_back({"target", next, n});

    std::vector<QubitId> target = span_qubits(c, "target");
    std::vector<QubitId> bottom(target.begin(), target.begin() + h);
    std::vector<QubitId> top(target.begin() + h, target.end());
    QubitId a0 = 0, a1 = 1, cross = 2;
    CarryIn cin = live_cin ? CarryIn::live(cin_q) : CarryIn::fixed(*options.carry_in_const);

    // 1. Vented addition into the bottom half; the carry into the top half
    //    is kept on the third clean qubit.
    VentLedger bottom_ledger;
    emit_streaming(c, bottom, cin, a0, a1, 0, nullptr, cross, &bottom_ledger);

    // 2. Vented addition into the top half, merged carry-xor borrowing the
    //    bottom half as the dirty register.
    VentLedger top_ledger;
    emit_streaming(c, top, CarryIn::live(cross), a0, a1, h, &bottom, {}, &top_ledger);

    // 3. Discharge the top half's vents: carry-xor of the complemented top
    //    sum back onto the borrowed bottom qubits, conjugated by
    //    classically-controlled Z gates.
    for (const auto &e : top_ledger.entries) {
        c.append_z(bottom[e.carry_bit_index - 1], {}, ClassicalExpr::record(e.record_index));
    }
    emit_carry_xor(c, top, CarryIn::live(cross), bottom, h, m >= 2 ? m - 2 : 0, true);
    for (const auto &e : top_ledger.entries) {
        c.append_z(bottom[e.carry_bit_index - 1], {}, ClassicalExpr::record(e.record_index));
    }

    // 4. The cross-half carry is no longer needed; vent it.
    uint32_t cross_record = c.append_measure_x_reset(cross);

    // 5. Discharge the bottom half's vents and the cross-carry vent with two
    //    carry-xors interleaved with Z gates, borrowing the top half. For odd
    //    n the bottom half is one carry longer than the top half, so a freed
    //    clean ancilla supplies the extra slot.
    std::vector<QubitId> borrowed = top;
    if (borrowed.size() < h) {
        borrowed.push_back(a0);
    }
    auto bottom_fix_zs = [&]() {
        for (const auto &e : bottom_ledger.entries) {
            c.append_z(borrowed[e.carry_bit_index - 1], {}, ClassicalExpr::record(e.record_index));
        }
        c.append_z(borrowed[h - 1], {}, ClassicalExpr::record(cross_record));
    };
    emit_carry_xor(c, bottom, cin, borrowed, 0, h, true);
    bottom_fix_zs();
    emit_carry_xor(c, bottom, cin, borrowed, 0, h, true);
    bottom_fix_zs();
    return c;
}

namespace {

/// Shared expression-rewriting walk for bind_offset and apply_control.
/// `rewrite_polarity` maps (polarity, slot qubits) in place; returns false to
/// drop the instruction (condition folded to constant false).
template <typename PolFn, typename CondFn>
Circuit rewrite_instructions(const Circuit &circuit, PolFn &&pol_fn, CondFn &&cond_fn) {
    Circuit out;
    out.layout = circuit.layout;
    out.offset_width = circuit.offset_width;
    out.record_count = circuit.record_count;
    for (const auto &ins : circuit.instructions) {
        if (ins.kind == GateKind::MeasureXReset) {
            out.instructions.push_back(ins);
            continue;
        }
        Instruction copy = ins;
        for (auto &c : copy.controls) {
            pol_fn(c);
        }
        if (!cond_fn(copy)) {
            continue;
        }
        canonicalize_controls(copy.controls);
        out.instructions.push_back(std::move(copy));
    }
    return out;
}

}  // namespace

Circuit bind_offset(const Circuit &circuit, const OffsetConstant &d) {
    if (d.width != circuit.offset_width) {
        throw WidthError("offset width " + std::to_string(d.width) +
                         " does not match circuit width " + std::to_string(circuit.offset_width));
    }
    if (circuit.bound_offset.has_value()) {
        throw Error("circuit is already bound to an offset");
    }
    Circuit out = rewrite_instructions(
        circuit,
        [&](ControlTerm &c) { c.polarity = c.polarity.bind_offset_bits(d.value); },
        [&](Instruction &ins) {
            if (!ins.condition.has_value()) {
                return true;
            }
            ClassicalExpr e = ins.condition->bind_offset_bits(d.value);
            if (e.is_zero()) {
                return false;  // gate never fires
            }
            if (e.is_one()) {
                ins.condition.reset();
            } else {
                ins.condition = e;
            }
            return true;
        });
    out.bound_offset = d.value;
    return out;
}

Circuit apply_control(const Circuit &circuit, const OffsetConstant &d) {
    if (d.width != circuit.offset_width) {
        throw WidthError("offset width " + std::to_string(d.width) +
                         " does not match circuit width " + std::to_string(circuit.offset_width));
    }
    if (circuit.bound_offset.has_value()) {
        throw Error("apply_control needs a symbolic circuit");
    }
    if (circuit.layout.has("control")) {
        throw Error("circuit already has a control qubit");
    }
    QubitId ctrl = circuit.qubit_count();
    auto term_parity = [&](const ClassicalExpr &e) {
        return (std::popcount(e.offset_mask & d.value) & 1) != 0;
    };
    Circuit out = rewrite_instructions(
        circuit,
        [&](ControlTerm &c) {
            bool add_ctrl = term_parity(c.polarity);
            c.polarity = ClassicalExpr{c.polarity.constant, c.polarity.record_mask, 0};
            if (add_ctrl) {
                // The inversion is now conditioned on the control qubit:
                // the slot becomes a parity group including it.
                auto it = std::find(c.qubits.begin(), c.qubits.end(), ctrl);
                if (it != c.qubits.end()) {
                    c.qubits.erase(it);
                } else {
                    c.qubits.push_back(ctrl);
                }
            }
        },
        [&](Instruction &ins) {
            if (!ins.condition.has_value()) {
                return true;
            }
            bool add_ctrl = term_parity(*ins.condition);
            ClassicalExpr e0{ins.condition->constant, ins.condition->record_mask, 0};
            if (add_ctrl) {
                if (ins.controls.size() >= 2) {
                    throw Error(
                        "offset term in a condition would promote a Toffoli to a "
                        "3-controlled gate");
                }
                ins.controls.push_back({{ctrl}, ClassicalExpr::one() ^ e0});
                ins.condition.reset();
                return true;
            }
            if (e0.is_zero()) {
                return false;
            }
            if (e0.is_one()) {
                ins.condition.reset();
            } else {
                ins.condition = e0;
            }
            return true;
        });
    out.layout.spans.push_back({"control", ctrl, 1});
    out.bound_offset = d.value;
    return out;
}

}  // namespace ventadd
