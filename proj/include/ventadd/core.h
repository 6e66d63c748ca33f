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

#ifndef VENTADD_CORE_H
#define VENTADD_CORE_H

#include <cstdint>

namespace ventadd {

/// A classical addend d together with the register width n it targets.
/// All register values are little-endian: bit 0 is the least significant.
struct OffsetConstant {
    uint64_t value = 0;
    uint32_t width = 1;

    OffsetConstant() = default;
    OffsetConstant(uint64_t value, uint32_t width);

    bool bit(uint32_t k) const { return k < 64 && ((value >> k) & 1); }
    bool operator==(const OffsetConstant &other) const = default;
};

/// x_k = floor(x / 2^k) mod 2.
inline int bit_at(uint64_t x, uint32_t k) {
    return k < 64 ? static_cast<int>((x >> k) & 1) : 0;
}

/// Majority of three bits: floor((a+b+c)/2), equivalently ((a^c)&(b^c))^c.
inline int maj_bit(int a, int b, int c) {
    return (a + b + c) / 2;
}

/// The carries generated by an addition, truncated to the register width.
/// Bit 0 is the carry-in; bit k+1 is maj(x_k, d_k, c_k). The overflow carry
/// (bit n) is not stored here; see carry_out_bit.
struct CarryWord {
    uint64_t bits = 0;
    uint32_t width = 0;

    int bit(uint32_t k) const { return bit_at(bits, k); }
    bool operator==(const CarryWord &other) const = default;
};

/// carry(x, d, c0) = x ^ d ^ (x + d + c0), truncated to n bits.
CarryWord carry_word(uint64_t x, uint64_t d, int c0, uint32_t n);

/// Bit n of x ^ d ^ (x + d + c0): the carry out of the top bit.
int carry_out_bit(uint64_t x, uint64_t d, int c0, uint32_t n);

/// (x + d + c0) mod 2^n.
uint64_t reference_add(uint64_t x, uint64_t d, int c0, uint32_t n);

/// The n-bit complement 2^n - 1 - x.
uint64_t complement_mod(uint64_t x, uint32_t n);

/// Largest register width the integer helpers accept.
constexpr uint32_t kMaxWidth = 63;

}  // namespace ventadd

#endif
