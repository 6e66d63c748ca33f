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

#include <doctest.h>

#include "ventadd/errors.h"

using namespace ventadd;

TEST_CASE("bit_at extracts little-endian bits") {
    // 43 = 101011b
    CHECK(bit_at(43, 0) == 1);
    CHECK(bit_at(43, 1) == 1);
    CHECK(bit_at(43, 2) == 0);
    CHECK(bit_at(43, 5) == 1);
    for (uint32_t k = 0; k < 70; k++) {
        CHECK(bit_at(0, k) == 0);
    }
    // 279 = 100010111b
    CHECK(bit_at(279, 8) == 1);
    CHECK(bit_at(279, 7) == 0);
}

TEST_CASE("maj_bit floor form equals xor-product form on all 8 triples") {
    CHECK(maj_bit(0, 0, 0) == 0);
    CHECK(maj_bit(1, 1, 0) == 1);
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            for (int c = 0; c < 2; c++) {
                int floor_form = (a + b + c) / 2;
                int xor_form = ((a ^ c) & (b ^ c)) ^ c;
                CHECK(maj_bit(a, b, c) == floor_form);
                CHECK(floor_form == xor_form);
            }
        }
    }
}

TEST_CASE("carry_word matches the defining xor") {
    // 5 ^ 3 ^ (5+3) = 6 ^ 8 = 14
    CHECK(carry_word(5, 3, 0, 4).bits == 14);
    for (uint64_t d = 0; d < 16; d++) {
        CHECK(carry_word(0, d, 0, 4).bits == 0);
    }
}

TEST_CASE("carry_word bit 0 is the carry-in and bits follow the maj recurrence") {
    for (uint32_t n = 1; n <= 6; n++) {
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            for (uint64_t d = 0; d < (uint64_t{1} << n); d++) {
                for (int c0 = 0; c0 < 2; c0++) {
                    CarryWord cw = carry_word(x, d, c0, n);
                    REQUIRE(cw.bit(0) == c0);
                    for (uint32_t k = 0; k + 1 < n; k++) {
                        REQUIRE(cw.bit(k + 1) ==
                                maj_bit(bit_at(x, k), bit_at(d, k), cw.bit(k)));
                    }
                    REQUIRE(carry_out_bit(x, d, c0, n) ==
                            maj_bit(bit_at(x, n - 1), bit_at(d, n - 1), cw.bit(n - 1)));
                }
            }
        }
    }
}

TEST_CASE("reference_add examples") {
    CHECK(reference_add(0, 43, 0, 6) == 43);
    CHECK(reference_add(63, 1, 0, 6) == 0);
    CHECK(reference_add(21, 43, 1, 6) == 1);  // 65 mod 64
}

TEST_CASE("sum reconstruction: add == x ^ d ^ carry mod 2^n") {
    for (uint32_t n : {1u, 3u, 6u}) {
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            for (uint64_t d = 0; d < (uint64_t{1} << n); d++) {
                for (int c0 = 0; c0 < 2; c0++) {
                    uint64_t mask = (uint64_t{1} << n) - 1;
                    REQUIRE(reference_add(x, d, c0, n) ==
                            ((x ^ d ^ carry_word(x, d, c0, n).bits) & mask));
                }
            }
        }
    }
}

TEST_CASE("carry complement identity holds exhaustively up to n=8") {
    for (uint32_t n = 1; n <= 8; n++) {
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            for (uint64_t d = 0; d < (uint64_t{1} << n); d++) {
                for (int c0 = 0; c0 < 2; c0++) {
                    uint64_t sum = reference_add(x, d, c0, n);
                    REQUIRE(carry_word(complement_mod(sum, n), d, c0, n) ==
                            carry_word(x, d, c0, n));
                }
            }
        }
    }
}

TEST_CASE("width and range checks") {
    CHECK_THROWS_AS(OffsetConstant(4, 2), WidthError);
    CHECK_THROWS_AS(OffsetConstant(0, 0), WidthError);
    CHECK_THROWS_AS(OffsetConstant(0, 64), WidthError);
    CHECK_NOTHROW(OffsetConstant(3, 2));
    CHECK_THROWS_AS(carry_word(16, 0, 0, 4), WidthError);
    CHECK_THROWS_AS(reference_add(0, 16, 0, 4), WidthError);
    CHECK(complement_mod(5, 4) == 10);
}
