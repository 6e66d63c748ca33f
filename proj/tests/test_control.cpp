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

#include <doctest.h>

#include "ventadd/builders.h"
#include "ventadd/errors.h"
#include "ventadd/resources.h"
#include "ventadd/simulator.h"

using namespace ventadd;

namespace {

uint64_t span_read(const Circuit &c, const char *name, uint64_t state) {
    const Span *s = c.layout.find(name);
    REQUIRE(s != nullptr);
    return (state >> s->start) & ((uint64_t{1} << s->length) - 1);
}

uint64_t span_write(const Circuit &c, const char *name, uint64_t state, uint64_t v) {
    const Span *s = c.layout.find(name);
    if (s == nullptr) return state;
    uint64_t mask = ((uint64_t{1} << s->length) - 1) << s->start;
    return (state & ~mask) | (v << s->start);
}

}  // namespace

TEST_CASE("bind_offset removes gates whose condition dies, keeps Toffolis") {
    Circuit sym = build_streaming_adder(6).circuit;
    Circuit zero = bind_offset(sym, OffsetConstant(0, 6));
    ResourceReport r = count(zero);
    CHECK(r.x_count == 0);  // every offset-conditioned X vanishes
    CHECK(r.toffoli_count == count(sym).toffoli_count);
    CHECK(zero.bound_offset == uint64_t{0});
}

TEST_CASE("bind_offset then simulate equals symbolic simulation at run time") {
    Circuit sym = build_adder_3clean(4);
    for (uint64_t d = 0; d < 16; d++) {
        Circuit bound = bind_offset(sym, OffsetConstant(d, 4));
        for (uint64_t in = 0; in < (uint64_t{1} << sym.qubit_count()); in++) {
            auto a = run_on_basis(sym, in, OffsetConstant(d, 4));
            auto b = run_on_basis(bound, in, {});
            REQUIRE(a.size() == b.size());
            for (size_t i = 0; i < a.size(); i++) {
                REQUIRE(a[i].state == b[i].state);
                REQUIRE(a[i].sign == b[i].sign);
                REQUIRE(a[i].records == b[i].records);
                REQUIRE(a[i].weight == b[i].weight);
            }
        }
    }
}

TEST_CASE("bind_offset rejects mismatched width and double binding") {
    Circuit sym = build_carry_xor(4);
    CHECK_THROWS_AS(bind_offset(sym, OffsetConstant(0, 5)), WidthError);
    Circuit bound = bind_offset(sym, OffsetConstant(3, 4));
    CHECK_THROWS_AS(bind_offset(bound, OffsetConstant(3, 4)), Error);
    CHECK_THROWS_AS(apply_control(bound, OffsetConstant(3, 4)), Error);
}

TEST_CASE("apply_control appends a control span and stays valid") {
    Circuit c = apply_control(build_adder_3clean(9), OffsetConstant(279, 9));
    REQUIRE(validate(c).empty());
    const Span *ctrl = c.layout.find("control");
    REQUIRE(ctrl != nullptr);
    CHECK(ctrl->length == 1);
    CHECK(ctrl->start == c.qubit_count() - 1);
}

TEST_CASE("controlled circuits cost exactly the bound circuit's Toffolis") {
    struct Case {
        BuilderId id;
        uint32_t n_lo, n_hi;
    };
    for (const Case &cs : {Case{BuilderId::StreamingAdder, 2, 6},
                           Case{BuilderId::CarryXor, 2, 6},
                           Case{BuilderId::Adder2CleanNDirty, 3, 6},
                           Case{BuilderId::Adder3Clean, 4, 6}}) {
        for (uint32_t n = cs.n_lo; n <= cs.n_hi; n++) {
            Circuit sym = build_circuit(cs.id, n);
            for (uint64_t d = 0; d < (uint64_t{1} << n); d++) {
                OffsetConstant dv(d, n);
                CHECK(count(apply_control(sym, dv)).toffoli_count ==
                      count(bind_offset(sym, dv)).toffoli_count);
            }
        }
    }
}

TEST_CASE("controlled adder maps target to target + control*d + carry_in") {
    uint32_t n = 5;
    for (BuilderId id : {BuilderId::StreamingAdder, BuilderId::Adder2CleanNDirty,
                         BuilderId::Adder3Clean}) {
        Circuit sym = build_circuit(id, n);
        for (uint64_t d = 0; d < (uint64_t{1} << n); d++) {
            Circuit c = apply_control(sym, OffsetConstant(d, n));
            for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
                for (int c0 = 0; c0 < 2; c0++) {
                    for (int ctrl = 0; ctrl < 2; ctrl++) {
                        uint64_t in = span_write(c, "target", 0, x);
                        in = span_write(c, "carry_in", in, c0);
                        in = span_write(c, "dirty", in, 0);
                        in = span_write(c, "control", in, ctrl);
                        uint64_t want = reference_add(x, ctrl ? d : 0, c0, n);
                        for (const auto &b : run_on_basis(c, in, {})) {
                            REQUIRE(span_read(c, "target", b.state) == want);
                            REQUIRE(span_read(c, "control", b.state) == uint64_t(ctrl));
                            if (id != BuilderId::StreamingAdder) {
                                REQUIRE(b.sign == 1);
                            }
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("control=0 is the identity on target when the carry-in is quiet") {
    // With a live carry-in qubit the control gates the offset only; building
    // with carry_in_const=0 makes control=0 a strict identity.
    uint32_t n = 4;
    AdderOptions opts;
    opts.carry_in_const = false;
    Circuit c = apply_control(build_adder_3clean(n, opts), OffsetConstant(13, n));
    CHECK(!c.layout.has("carry_in"));
    for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
        uint64_t in = span_write(c, "target", 0, x);
        for (const auto &b : run_on_basis(c, in, {})) {
            REQUIRE(span_read(c, "target", b.state) == x);
            REQUIRE(b.sign == 1);
        }
        // And control=1 adds the offset.
        in = span_write(c, "control", in, 1);
        for (const auto &b : run_on_basis(c, in, {})) {
            REQUIRE(span_read(c, "target", b.state) == reference_add(x, 13, 0, n));
        }
    }
}

TEST_CASE("controlled variants still never target the carry_in qubit") {
    for (BuilderId id : {BuilderId::StreamingAdder, BuilderId::CarryXor,
                         BuilderId::Adder2CleanNDirty, BuilderId::Adder3Clean}) {
        uint32_t n = builder_min_width(id) + 3;
        Circuit c = apply_control(build_circuit(id, n), OffsetConstant(21 & ((1 << n) - 1), n));
        CHECK(lint_carry_in_control_only(c));
    }
}

TEST_CASE("controlled carry-xor matches the gated-oracle") {
    uint32_t n = 4;
    Circuit sym = build_carry_xor(n);
    for (uint64_t d = 0; d < 16; d++) {
        Circuit c = apply_control(sym, OffsetConstant(d, n));
        for (uint64_t x = 0; x < 16; x++) {
            for (int c0 = 0; c0 < 2; c0++) {
                for (int ctrl = 0; ctrl < 2; ctrl++) {
                    uint64_t in = span_write(c, "target", 0, x);
                    in = span_write(c, "carry_in", in, c0);
                    in = span_write(c, "dirty", in, 5);
                    in = span_write(c, "control", in, ctrl);
                    auto branches = run_on_basis(c, in, {});
                    REQUIRE(branches.size() == 1);
                    uint64_t want = 5 ^ (carry_word(x, ctrl ? d : 0, c0, n).bits >> 1);
                    REQUIRE(span_read(c, "dirty", branches[0].state) == want);
                }
            }
        }
    }
}
