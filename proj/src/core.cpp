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

#include "ventadd/core.h"

#include "ventadd/errors.h"

namespace ventadd {

static void check_width(uint32_t n) {
    if (n < 1 || n > kMaxWidth) {
        throw WidthError("register width must be in [1, 63], got " + std::to_string(n));
    }
}

static void check_operand(uint64_t v, uint32_t n, const char *name) {
    if (n < 64 && (v >> n) != 0) {
        throw WidthError(std::string(name) + " does not fit in " + std::to_string(n) + " bits");
    }
}

OffsetConstant::OffsetConstant(uint64_t value, uint32_t width) : value(value), width(width) {
    check_width(width);
    check_operand(value, width, "offset");
}

CarryWord carry_word(uint64_t x, uint64_t d, int c0, uint32_t n) {
    check_width(n);
    check_operand(x, n, "x");
    check_operand(d, n, "d");
    uint64_t sum = x + d + static_cast<uint64_t>(c0 & 1);
    uint64_t mask = (uint64_t{1} << n) - 1;
    return CarryWord{(x ^ d ^ sum) & mask, n};
}

int carry_out_bit(uint64_t x, uint64_t d, int c0, uint32_t n) {
    check_width(n);
    check_operand(x, n, "x");
    check_operand(d, n, "d");
    uint64_t sum = x + d + static_cast<uint64_t>(c0 & 1);
    return bit_at(x ^ d ^ sum, n);
}

uint64_t reference_add(uint64_t x, uint64_t d, int c0, uint32_t n) {
    check_width(n);
    check_operand(x, n, "x");
    check_operand(d, n, "d");
    uint64_t mask = (uint64_t{1} << n) - 1;
    return (x + d + static_cast<uint64_t>(c0 & 1)) & mask;
}

uint64_t complement_mod(uint64_t x, uint32_t n) {
    check_width(n);
    check_operand(x, n, "x");
    return ((uint64_t{1} << n) - 1) - x;
}

}  // namespace ventadd
