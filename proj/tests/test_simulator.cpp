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

#include "ventadd/simulator.h"

#include <doctest.h>

#include <cmath>
#include <map>

#include "ventadd/builders.h"
#include "ventadd/errors.h"

using namespace ventadd;

namespace {

uint64_t span_read(const Circuit &c, const char *name, uint64_t state) {
    const Span *s = c.layout.find(name);
    REQUIRE(s != nullptr);
    return (state >> s->start) & ((uint64_t{1} << s->length) - 1);
}

double l2_norm(const std::vector<double> &v) {
    double s = 0;
    for (double a : v) s += a * a;
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("empty circuit returns the input as a single full-weight branch") {
    Circuit c;
    c.layout.spans.push_back({"target", 0, 3});
    c.offset_width = 3;
    auto branches = run(c, uint64_t{5}, OffsetConstant(0, 3));
    REQUIRE(branches.size() == 1);
    CHECK(branches[0].branch_weight == 1.0);
    CHECK(branches[0].amplitudes[5] == 1.0);
}

TEST_CASE("one X-basis measurement of |0> gives two half-weight branches") {
    Circuit c;
    c.layout.spans.push_back({"target", 0, 1});
    c.offset_width = 1;
    c.append_measure_x_reset(0);
    auto branches = run(c, uint64_t{0}, OffsetConstant(0, 1));
    REQUIRE(branches.size() == 2);
    for (const auto &b : branches) {
        CHECK(b.branch_weight == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(b.amplitudes[0] == doctest::Approx(1.0));  // reset to |0>
        CHECK(b.amplitudes[1] == 0.0);
    }
    CHECK(branches[0].records != branches[1].records);
}

TEST_CASE("the measured qubit's sign shows up only on the |-> branch of |1>") {
    Circuit c;
    c.layout.spans.push_back({"target", 0, 1});
    c.offset_width = 1;
    c.append_measure_x_reset(0);
    auto branches = run(c, uint64_t{1}, OffsetConstant(0, 1));
    REQUIRE(branches.size() == 2);
    std::map<uint64_t, double> by_record;
    for (const auto &b : branches) {
        by_record[b.records] = b.amplitudes[0];
    }
    CHECK(by_record[0] == doctest::Approx(1.0));
    CHECK(by_record[1] == doctest::Approx(-1.0));
}

TEST_CASE("3-clean adder at n=4, d=5, x=7, c0=1 yields 13 on every branch") {
    Circuit c = build_adder_3clean(4);
    const Span *t = c.layout.find("target");
    const Span *k = c.layout.find("carry_in");
    uint64_t in = (uint64_t{7} << t->start) | (uint64_t{1} << k->start);
    auto branches = run(c, in, OffsetConstant(5, 4));
    REQUIRE(!branches.empty());
    double total = 0;
    for (const auto &b : branches) {
        total += b.branch_weight;
        CHECK(l2_norm(b.amplitudes) == doctest::Approx(1.0).epsilon(1e-12));
        for (uint64_t i = 0; i < b.amplitudes.size(); i++) {
            if (b.amplitudes[i] != 0.0) {
                CHECK(((i >> t->start) & 15) == 13);
            }
        }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("reference_unitary_apply") {
    std::vector<double> basis0(64, 0.0);
    basis0[0] = 1.0;
    auto moved = reference_unitary_apply(6, OffsetConstant(43, 6), 0, basis0);
    CHECK(moved[43] == 1.0);

    auto same = reference_unitary_apply(6, OffsetConstant(0, 6), 0, basis0);
    CHECK(same == basis0);

    std::vector<double> uniform(64, 1.0 / 8.0);
    auto rotated = reference_unitary_apply(6, OffsetConstant(17, 6), 1, uniform);
    CHECK(rotated == uniform);

    CHECK_THROWS_AS(reference_unitary_apply(5, OffsetConstant(0, 5), 0, basis0), Error);
}

TEST_CASE("equal_up_to_global_phase") {
    std::vector<double> v{0.6, 0.8};
    std::vector<double> neg{-0.6, -0.8};
    std::vector<double> orth{0.8, -0.6};
    CHECK(equal_up_to_global_phase(v, v, 1e-9));
    CHECK(equal_up_to_global_phase(v, neg, 1e-9));
    CHECK(!equal_up_to_global_phase(v, orth, 1e-9));
    CHECK_THROWS_AS(equal_up_to_global_phase(v, std::vector<double>{1.0}, 1e-9), Error);
}

TEST_CASE("dense and tracked-basis engines agree branch for branch") {
    for (uint32_t n : {3u, 4u}) {
        Circuit c = build_adder_2clean_ndirty(n);
        uint64_t dim = uint64_t{1} << c.qubit_count();
        for (uint64_t d : {1ull, 6ull}) {
            for (uint64_t in = 0; in < dim; in += 3) {
                auto dense = run(c, in, OffsetConstant(d, n));
                auto basis = run_on_basis(c, in, OffsetConstant(d, n));
                REQUIRE(dense.size() == basis.size());
                for (size_t i = 0; i < dense.size(); i++) {
                    REQUIRE(dense[i].records == basis[i].records);
                    REQUIRE(dense[i].branch_weight ==
                            doctest::Approx(basis[i].weight).epsilon(1e-12));
                    for (uint64_t j = 0; j < dim; j++) {
                        double want = j == basis[i].state ? basis[i].sign : 0.0;
                        REQUIRE(dense[i].amplitudes[j] == doctest::Approx(want).epsilon(1e-12));
                    }
                }
            }
        }
    }
}

TEST_CASE("vent records have exact half/half marginals and weights sum to 1") {
    Circuit c = build_adder_2clean_ndirty(5);
    uint64_t in = 9;
    auto branches = run_on_basis(c, in, OffsetConstant(19, 5));
    double total = 0;
    std::vector<double> marginal(c.record_count, 0.0);
    for (const auto &b : branches) {
        total += b.weight;
        for (uint32_t r = 0; r < c.record_count; r++) {
            if (b.records >> r & 1) marginal[r] += b.weight;
        }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
    for (uint32_t r = 0; r < c.record_count; r++) {
        CHECK(marginal[r] == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("the sum is identical across all branches; randomness is phase-only") {
    Circuit c = build_adder_3clean(5);
    for (uint64_t d : {3ull, 30ull}) {
        auto branches = run_on_basis(c, 0, OffsetConstant(d, 5));
        REQUIRE(branches.size() >= 2);
        uint64_t first = span_read(c, "target", branches[0].state);
        for (const auto &b : branches) {
            CHECK(span_read(c, "target", b.state) == first);
        }
    }
}

TEST_CASE("seeded sampling is reproducible and respects the seed") {
    Circuit c = build_adder_3clean(5);
    auto a = run_on_basis(c, 0, OffsetConstant(9, 5), BranchPolicy::seeded_sample(42, 16));
    auto b = run_on_basis(c, 0, OffsetConstant(9, 5), BranchPolicy::seeded_sample(42, 16));
    REQUIRE(a.size() == b.size());
    bool varied = false;
    for (size_t i = 0; i < a.size(); i++) {
        CHECK(a[i].records == b[i].records);
        varied |= a[i].records != a[0].records;
    }
    CHECK(varied);  // 16 samples over 3 vents should not all collide
    auto other = run_on_basis(c, 0, OffsetConstant(9, 5), BranchPolicy::seeded_sample(43, 16));
    bool differs = false;
    for (size_t i = 0; i < a.size(); i++) {
        differs |= other[i].records != a[i].records;
    }
    CHECK(differs);
}

TEST_CASE("forced policy pins every record") {
    Circuit c = build_adder_3clean(5);
    for (uint64_t forced : {uint64_t{0}, uint64_t{0b101}}) {
        auto branches = run_on_basis(c, 0, OffsetConstant(9, 5), BranchPolicy::forced(forced));
        REQUIRE(branches.size() == 1);
        CHECK(branches[0].records == forced);
    }
}

TEST_CASE("budget and cap violations raise BudgetExceeded") {
    Circuit big = build_streaming_adder(30).circuit;  // 33 qubits
    CHECK_THROWS_AS(run_on_basis(big, 0, OffsetConstant(0, 30)), BudgetExceeded);

    Circuit c = build_adder_2clean_ndirty(6);  // 4 vents
    BranchPolicy tight;
    tight.enumerate_cap = 2;
    CHECK_THROWS_AS(run_on_basis(c, 0, OffsetConstant(0, 6), tight), BudgetExceeded);

    VerifyOptions options;
    options.n = 30;
    CHECK_THROWS_AS(verify_builder(BuilderId::StreamingAdder, options), BudgetExceeded);
}

TEST_CASE("running a symbolic circuit without an offset is an error") {
    Circuit c = build_carry_xor(3);
    CHECK_THROWS_AS(run_on_basis(c, 0, {}), Error);
    CHECK_NOTHROW(run_on_basis(bind_offset(c, OffsetConstant(2, 3)), 0, {}));
}

TEST_CASE("verify_builder passes the spec matrices") {
    VerifyOptions options;
    options.n = 2;
    VerifyReport stream = verify_builder(BuilderId::StreamingAdder, options);
    CHECK(stream.passed());
    CHECK(stream.cases > 0);

    options.n = 4;
    VerifyReport add3 = verify_builder(BuilderId::Adder3Clean, options);
    CHECK(add3.passed());

    options.n = 4;
    VerifyReport cx = verify_builder(BuilderId::CarryXor, options);
    CHECK(cx.passed());

    options.n = 4;
    options.controlled = true;
    VerifyReport ctl = verify_builder(BuilderId::Adder2CleanNDirty, options);
    CHECK(ctl.passed());
}

TEST_CASE("a dropped phase correction is caught by the phase test") {
    Circuit c = bind_offset(build_adder_3clean(4), OffsetConstant(5, 4));
    // Remove the first classically-controlled Z.
    Circuit mutant = c;
    for (size_t i = 0; i < mutant.instructions.size(); i++) {
        if (mutant.instructions[i].kind == GateKind::Z &&
            mutant.instructions[i].condition.has_value()) {
            mutant.instructions.erase(mutant.instructions.begin() + i);
            break;
        }
    }
    REQUIRE(mutant.instructions.size() == c.instructions.size() - 1);

    uint64_t dim = uint64_t{1} << c.qubit_count();
    const Span *t = c.layout.find("target");
    std::vector<double> input(dim, 0.0);
    for (uint64_t x = 0; x < 16; x++) {
        input[x << t->start] = 0.25;
    }
    OffsetConstant d(5, 4);
    std::vector<double> ref = reference_output_state(c.layout, input, d, 0);
    bool intact_ok = true;
    for (const auto &b : run(c, input, {})) {
        intact_ok &= equal_up_to_global_phase(b.amplitudes, ref, 1e-9);
    }
    CHECK(intact_ok);
    bool mutant_failed = false;
    std::string failing_branch;
    for (const auto &b : run(mutant, input, {})) {
        if (!equal_up_to_global_phase(b.amplitudes, ref, 1e-9)) {
            mutant_failed = true;
            failing_branch = "records=" + std::to_string(b.records);
        }
    }
    CHECK(mutant_failed);
    CHECK(!failing_branch.empty());
}
