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

#ifndef VENTADD_BUILDERS_H
#define VENTADD_BUILDERS_H

#include <optional>
#include <vector>

#include "ventadd/circuit.h"
#include "ventadd/core.h"

namespace ventadd {

/// One vented carry: measuring record `record_index` equal to 1 means a
/// phase flip by carry bit `carry_bit_index` of the addition is still
/// outstanding. The carry is recomputable from the finished sum via
/// carry(~target', d, carry_in).
struct VentLedgerEntry {
    uint32_t record_index = 0;
    uint32_t carry_bit_index = 0;

    bool operator==(const VentLedgerEntry &other) const = default;
};

struct VentLedger {
    std::vector<VentLedgerEntry> entries;
};

struct StreamingAdder {
    Circuit circuit;
    VentLedger ledger;
};

struct StreamingOptions {
    /// Also xor each vented carry into a dirty register as the adder runs,
    /// saving a later carry-xor. Adds an n-2 qubit dirty span to the layout.
    bool merged_carry_xor = false;
    /// Replace the carry-in qubit with a classical constant. The layout then
    /// has no carry_in span.
    std::optional<bool> carry_in_const;
};

struct AdderOptions {
    std::optional<bool> carry_in_const;
};

/// Streaming adder: target <- (target + d + carry_in) mod 2^n using 2 clean
/// ancillae and n-1 Toffolis, venting the n-2 intermediate carries. Offset
/// bits stay symbolic (d_k terms) until bind_offset or simulation time.
/// The returned ledger lists the phase flips left outstanding.
StreamingAdder build_streaming_adder(uint32_t n, const StreamingOptions &options = {});

/// Carry-xor: dirty <- dirty ^ floor(carry(target, d, carry_in) / 2) over an
/// n-1 qubit dirty span, leaving target and carry_in unchanged. 2n-3
/// Toffolis, no measurements. Skips the least significant carry since that
/// equals the carry input.
Circuit build_carry_xor(uint32_t n, const AdderOptions &options = {});

/// Full adder with 2 clean ancillae and n-2 dirty (borrowed) ancillae,
/// 3n +- O(1) Toffolis. A merged-carry-xor streaming adder runs first; the
/// circuit ends with a carry-xor on the complemented sum conjugated by
/// classically-controlled Z gates, which discharges every vented phase.
/// The dirty span is returned to its input value exactly.
Circuit build_adder_2clean_ndirty(uint32_t n, const AdderOptions &options = {});

/// Full adder with 3 clean ancillae and no dirty ancillae, 4n +- O(1)
/// Toffolis. Splits the register in halves, each borrowing the other as
/// dirty workspace:
///   1. vented addition into the bottom half, keeping the cross-half carry
///      on the third clean qubit;
///   2. vented addition into the top half with a merged carry-xor borrowing
///      the bottom half;
///   3. phase-fix carry-xor for the top half, targeting the bottom half;
///   4. vent of the cross-half carry;
///   5. two phase-fix carry-xors for the bottom half, targeting the top
///      half (plus one clean ancilla when the bottom half is larger).
Circuit build_adder_3clean(uint32_t n, const AdderOptions &options = {});

/// Specializes every symbolic d_k to the given constant. Gates whose
/// classical condition folds to false are removed, so gate counts vary with
/// popcount(d); Toffolis are unconditional and never vanish.
Circuit bind_offset(const Circuit &circuit, const OffsetConstant &d);

/// Rewrites the symbolic circuit into a controlled adder for the concrete
/// offset d, appending one control qubit: offset terms with d_k = 1 become
/// usages of the control qubit (conditions gain a control, polarity
/// inversions become parity groups with the control), d_k = 0 terms are
/// dropped. Introduces no Toffolis beyond bind_offset(circuit, d).
///
/// The result maps target <- (target + control*d + carry_in) mod 2^n: with
/// control = 1 it is the offset-d adder, with control = 0 the offset-0
/// adder, which still consumes a live carry-in. A carry-in qubit cannot be
/// gated by the control without extra Toffolis, so circuits needing
/// control=0 to be a strict identity should be built with carry_in_const=0.
Circuit apply_control(const Circuit &circuit, const OffsetConstant &d);

}  // namespace ventadd

#endif
