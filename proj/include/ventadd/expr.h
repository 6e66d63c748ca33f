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

#ifndef VENTADD_EXPR_H
#define VENTADD_EXPR_H

#include <cstdint>
#include <string>

namespace ventadd {

/// XOR-affine boolean over measurement records r_i and classical offset bits
/// d_k. The value is constant ^ parity(selected records) ^ parity(selected
/// offset bits). XOR of a term with itself cancels, so presence/absence of
/// each term is all that matters and a bitmask per term family suffices.
///
/// Serialized form joins terms with '^', e.g. "1^r3^d5". The all-zero
/// expression prints as "0".
struct ClassicalExpr {
    bool constant = false;
    uint64_t record_mask = 0;
    uint64_t offset_mask = 0;

    static ClassicalExpr zero() { return {}; }
    static ClassicalExpr one() { return {true, 0, 0}; }
    static ClassicalExpr record(uint32_t index);
    static ClassicalExpr offset_bit(uint32_t index);

    ClassicalExpr operator^(const ClassicalExpr &other) const {
        return {constant != other.constant,
                record_mask ^ other.record_mask,
                offset_mask ^ other.offset_mask};
    }
    bool operator==(const ClassicalExpr &other) const = default;

    bool is_constant() const { return record_mask == 0 && offset_mask == 0; }
    bool is_zero() const { return !constant && is_constant(); }
    bool is_one() const { return constant && is_constant(); }
    bool has_offset_terms() const { return offset_mask != 0; }
    bool has_record_terms() const { return record_mask != 0; }

    /// Evaluates with records given as a bitmask (bit i = record i) and the
    /// offset as its integer value.
    bool eval(uint64_t records, uint64_t offset_value) const;

    /// Substitutes concrete offset bits, folding them into the constant.
    ClassicalExpr bind_offset_bits(uint64_t offset_value) const;

    std::string str() const;
    static ClassicalExpr parse(const std::string &text);
};

}  // namespace ventadd

#endif
