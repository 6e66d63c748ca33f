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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "ventadd/errors.h"

namespace ventadd {

namespace {

constexpr double kPruneWeight = 1e-12;

uint64_t splitmix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Counter-based uniform double keyed by (seed, sample, instruction index),
/// so branch choices are reproducible bit-for-bit across platforms.
double unit_double(uint64_t seed, uint64_t sample, uint64_t instruction_index) {
    uint64_t h = splitmix64(splitmix64(splitmix64(seed) ^ sample) ^ instruction_index);
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

bool circuit_has_offset_terms(const Circuit &c) {
    for (const auto &ins : c.instructions) {
        if (ins.condition.has_value() && ins.condition->has_offset_terms()) return true;
        for (const auto &ct : ins.controls) {
            if (ct.polarity.has_offset_terms()) return true;
        }
    }
    return false;
}

uint64_t resolve_offset_value(const Circuit &c, const std::optional<OffsetConstant> &d) {
    if (d.has_value()) {
        if (d->width != c.offset_width) {
            throw WidthError("offset width does not match circuit width");
        }
        return d->value;
    }
    if (circuit_has_offset_terms(c)) {
        throw Error("circuit has unresolved offset terms and no offset was supplied");
    }
    return 0;
}

void check_budget(const Circuit &c, const BranchPolicy &policy, bool dense) {
    if (c.qubit_count() > policy.max_qubits) {
        throw BudgetExceeded("circuit needs " + std::to_string(c.qubit_count()) +
                             " qubits, budget is " + std::to_string(policy.max_qubits));
    }
    if (policy.mode == BranchPolicy::Mode::EnumerateAll &&
        c.measurement_count() > policy.enumerate_cap) {
        throw BudgetExceeded("enumerate_all over " + std::to_string(c.measurement_count()) +
                             " measurements exceeds the cap of " +
                             std::to_string(policy.enumerate_cap));
    }
    (void)dense;
}

struct EvalCtx {
    uint64_t offset_value;
    uint64_t records;
};

bool controls_satisfied_on_index(const Instruction &ins, uint64_t index, const EvalCtx &ctx) {
    for (const auto &ct : ins.controls) {
        int v = 0;
        for (QubitId q : ct.qubits) {
            v ^= static_cast<int>(index >> q & 1);
        }
        if (v != static_cast<int>(ct.polarity.eval(ctx.records, ctx.offset_value))) {
            return false;
        }
    }
    return true;
}

bool condition_fires(const Instruction &ins, const EvalCtx &ctx) {
    return !ins.condition.has_value() || ins.condition->eval(ctx.records, ctx.offset_value);
}

// ---------------------------------------------------------------------------
// Tracked-basis engine.
// ---------------------------------------------------------------------------

void basis_exec(const Circuit &c, uint64_t offset_value, const BranchPolicy &policy,
                uint64_t sample, BasisBranch branch, size_t from,
                std::vector<BasisBranch> &out) {
    for (size_t i = from; i < c.instructions.size(); i++) {
        const Instruction &ins = c.instructions[i];
        EvalCtx ctx{offset_value, branch.records};
        if (ins.kind == GateKind::MeasureXReset) {
            int held = static_cast<int>(branch.state >> ins.target & 1);
            branch.state &= ~(uint64_t{1} << ins.target);
            auto child = [&](int m) {
                BasisBranch b = branch;
                b.weight *= 0.5;
                b.sign *= (m == 1 && held == 1) ? -1 : 1;
                b.records |= static_cast<uint64_t>(m) << ins.record;
                return b;
            };
            switch (policy.mode) {
                case BranchPolicy::Mode::EnumerateAll:
                    basis_exec(c, offset_value, policy, sample, child(0), i + 1, out);
                    basis_exec(c, offset_value, policy, sample, child(1), i + 1, out);
                    return;
                case BranchPolicy::Mode::SeededSample: {
                    int m = unit_double(policy.seed, sample, i) < 0.5 ? 0 : 1;
                    branch = child(m);
                    break;
                }
                case BranchPolicy::Mode::Forced: {
                    int m = static_cast<int>(policy.forced_records >> ins.record & 1);
                    branch = child(m);
                    break;
                }
            }
            continue;
        }
        if (!condition_fires(ins, ctx) || !controls_satisfied_on_index(ins, branch.state, ctx)) {
            continue;
        }
        if (ins.kind == GateKind::X) {
            branch.state ^= uint64_t{1} << ins.target;
        } else {  // Z
            if (branch.state >> ins.target & 1) {
                branch.sign = -branch.sign;
            }
        }
    }
    out.push_back(branch);
}

// ---------------------------------------------------------------------------
// Dense engine.
// ---------------------------------------------------------------------------

void apply_gate_dense(const Instruction &ins, const EvalCtx &ctx, std::vector<double> &amps) {
    uint64_t bit = uint64_t{1} << ins.target;
    if (ins.kind == GateKind::X) {
        for (uint64_t i = 0; i < amps.size(); i++) {
            if ((i & bit) == 0 && controls_satisfied_on_index(ins, i, ctx)) {
                std::swap(amps[i], amps[i | bit]);
            }
        }
    } else {  // Z
        for (uint64_t i = 0; i < amps.size(); i++) {
            if ((i & bit) != 0 && controls_satisfied_on_index(ins, i, ctx)) {
                amps[i] = -amps[i];
            }
        }
    }
}

/// Projects onto the X-basis outcome m, resets the qubit to |0>, and returns
/// the outcome probability (0 when the branch is impossible).
double project_measure(const std::vector<double> &amps, QubitId q, int m,
                       std::vector<double> &out) {
    uint64_t bit = uint64_t{1} << q;
    double s = m == 0 ? 1.0 : -1.0;
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    out.assign(amps.size(), 0.0);
    double total = 0;
    for (uint64_t i = 0; i < amps.size(); i++) {
        if (i & bit) continue;
        double a = (amps[i] + s * amps[i | bit]) * inv_sqrt2;
        out[i] = a;
        total += a * a;
    }
    if (total < kPruneWeight) {
        return 0.0;
    }
    double norm = 1.0 / std::sqrt(total);
    for (auto &a : out) {
        a *= norm;
    }
    return total;
}

void dense_exec(const Circuit &c, uint64_t offset_value, const BranchPolicy &policy,
                uint64_t sample, std::vector<double> amps, double weight, uint64_t records,
                size_t from, std::vector<SimState> &out) {
    for (size_t i = from; i < c.instructions.size(); i++) {
        const Instruction &ins = c.instructions[i];
        EvalCtx ctx{offset_value, records};
        if (ins.kind == GateKind::MeasureXReset) {
            std::vector<double> child;
            switch (policy.mode) {
                case BranchPolicy::Mode::EnumerateAll: {
                    for (int m = 0; m < 2; m++) {
                        double p = project_measure(amps, ins.target, m, child);
                        if (p <= 0) continue;
                        uint64_t r = records | static_cast<uint64_t>(m) << ins.record;
                        dense_exec(c, offset_value, policy, sample, child, weight * p, r, i + 1,
                                   out);
                    }
                    return;
                }
                case BranchPolicy::Mode::SeededSample: {
                    std::vector<double> zero_branch;
                    double p0 = project_measure(amps, ins.target, 0, zero_branch);
                    int m = unit_double(policy.seed, sample, i) < p0 ? 0 : 1;
                    double p = m == 0 ? p0 : project_measure(amps, ins.target, 1, child);
                    if (m == 0) child = std::move(zero_branch);
                    amps = std::move(child);
                    weight *= p;
                    records |= static_cast<uint64_t>(m) << ins.record;
                    break;
                }
                case BranchPolicy::Mode::Forced: {
                    int m = static_cast<int>(policy.forced_records >> ins.record & 1);
                    double p = project_measure(amps, ins.target, m, child);
                    if (p <= 0) {
                        throw Error("forced record " + std::to_string(ins.record) +
                                    " selects a zero-probability branch");
                    }
                    amps = std::move(child);
                    weight *= p;
                    records |= static_cast<uint64_t>(m) << ins.record;
                    break;
                }
            }
            continue;
        }
        if (!condition_fires(ins, ctx)) {
            continue;
        }
        apply_gate_dense(ins, ctx, amps);
    }
    out.push_back({std::move(amps), records, weight});
}

}  // namespace

BranchPolicy BranchPolicy::seeded_sample(uint64_t seed, uint32_t count) {
    BranchPolicy p;
    p.mode = Mode::SeededSample;
    p.seed = seed;
    p.sample_count = count;
    return p;
}

BranchPolicy BranchPolicy::forced(uint64_t records) {
    BranchPolicy p;
    p.mode = Mode::Forced;
    p.forced_records = records;
    return p;
}

std::vector<SimState> run(const Circuit &circuit, const std::vector<double> &input,
                          std::optional<OffsetConstant> d, const BranchPolicy &policy) {
    require_valid(circuit);
    check_budget(circuit, policy, true);
    uint64_t offset_value = resolve_offset_value(circuit, d);
    if (input.size() != (uint64_t{1} << circuit.qubit_count())) {
        throw Error("input dimension does not match the circuit's qubit count");
    }
    std::vector<SimState> out;
    uint32_t passes =
        policy.mode == BranchPolicy::Mode::SeededSample ? policy.sample_count : 1;
    for (uint32_t s = 0; s < passes; s++) {
        dense_exec(circuit, offset_value, policy, s, input, 1.0, 0, 0, out);
    }
    return out;
}

std::vector<SimState> run(const Circuit &circuit, uint64_t basis_input,
                          std::optional<OffsetConstant> d, const BranchPolicy &policy) {
    auto branches = run_on_basis(circuit, basis_input, d, policy);
    std::vector<SimState> out;
    out.reserve(branches.size());
    uint64_t dim = uint64_t{1} << circuit.qubit_count();
    for (const auto &b : branches) {
        SimState s;
        s.amplitudes.assign(dim, 0.0);
        s.amplitudes[b.state] = b.sign;
        s.records = b.records;
        s.branch_weight = b.weight;
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<BasisBranch> run_on_basis(const Circuit &circuit, uint64_t basis_input,
                                      std::optional<OffsetConstant> d,
                                      const BranchPolicy &policy) {
    require_valid(circuit);
    check_budget(circuit, policy, false);
    uint64_t offset_value = resolve_offset_value(circuit, d);
    if (circuit.qubit_count() < 64 && (basis_input >> circuit.qubit_count()) != 0) {
        throw Error("basis input out of range");
    }
    std::vector<BasisBranch> out;
    uint32_t passes =
        policy.mode == BranchPolicy::Mode::SeededSample ? policy.sample_count : 1;
    for (uint32_t s = 0; s < passes; s++) {
        basis_exec(circuit, offset_value, policy, s, BasisBranch{basis_input, 1, 1.0, 0}, 0, out);
    }
    return out;
}

std::vector<double> reference_unitary_apply(uint32_t n, const OffsetConstant &d, int c0,
                                            const std::vector<double> &state) {
    if (state.size() != (uint64_t{1} << n)) {
        throw Error("state dimension does not match width");
    }
    std::vector<double> out(state.size(), 0.0);
    uint64_t mask = (uint64_t{1} << n) - 1;
    for (uint64_t x = 0; x < state.size(); x++) {
        out[(x + d.value + static_cast<uint64_t>(c0 & 1)) & mask] = state[x];
    }
    return out;
}

bool equal_up_to_global_phase(const std::vector<double> &a, const std::vector<double> &b,
                              double tol) {
    if (a.size() != b.size()) {
        throw Error("state dimension mismatch");
    }
    double dot = 0;
    for (size_t i = 0; i < a.size(); i++) {
        dot += a[i] * b[i];
    }
    return std::abs(dot) >= 1 - tol;
}

std::vector<double> reference_output_state(const RegisterLayout &layout,
                                           const std::vector<double> &input,
                                           const OffsetConstant &d, int carry_in_const) {
    const Span *target = layout.find("target");
    if (target == nullptr) {
        throw Error("layout has no target span");
    }
    const Span *cin = layout.find("carry_in");
    const Span *ctrl = layout.find("control");
    uint32_t n = target->length;
    uint64_t tmask = ((uint64_t{1} << n) - 1) << target->start;
    std::vector<double> out(input.size(), 0.0);
    for (uint64_t i = 0; i < input.size(); i++) {
        if (input[i] == 0.0) continue;
        uint64_t x = (i & tmask) >> target->start;
        int c0 = cin != nullptr ? static_cast<int>(i >> cin->start & 1) : (carry_in_const & 1);
        uint64_t eff = ctrl == nullptr || (i >> ctrl->start & 1) ? d.value : 0;
        uint64_t x2 = (x + eff + static_cast<uint64_t>(c0)) & ((uint64_t{1} << n) - 1);
        out[(i & ~tmask) | (x2 << target->start)] += input[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Builder verification.
// ---------------------------------------------------------------------------

const char *builder_name(BuilderId id) {
    switch (id) {
        case BuilderId::StreamingAdder:
            return "stream";
        case BuilderId::CarryXor:
            return "carryxor";
        case BuilderId::Adder2CleanNDirty:
            return "add2c";
        case BuilderId::Adder3Clean:
            return "add3c";
    }
    return "?";
}

std::optional<BuilderId> builder_from_name(std::string_view name) {
    for (BuilderId id : {BuilderId::StreamingAdder, BuilderId::CarryXor,
                         BuilderId::Adder2CleanNDirty, BuilderId::Adder3Clean}) {
        if (name == builder_name(id)) return id;
    }
    return {};
}

uint32_t builder_min_width(BuilderId id) {
    switch (id) {
        case BuilderId::StreamingAdder:
        case BuilderId::CarryXor:
            return 2;
        case BuilderId::Adder2CleanNDirty:
            return 3;
        case BuilderId::Adder3Clean:
            return 4;
    }
    return 2;
}

Circuit build_circuit(BuilderId id, uint32_t n, const AdderOptions &options) {
    switch (id) {
        case BuilderId::StreamingAdder: {
            StreamingOptions so;
            so.carry_in_const = options.carry_in_const;
            return build_streaming_adder(n, so).circuit;
        }
        case BuilderId::CarryXor:
            return build_carry_xor(n, options);
        case BuilderId::Adder2CleanNDirty:
            return build_adder_2clean_ndirty(n, options);
        case BuilderId::Adder3Clean:
            return build_adder_3clean(n, options);
    }
    throw Error("unknown builder");
}

std::string VerifyReport::summary() const {
    std::ostringstream s;
    s << (passed() ? "PASS" : "FAIL") << ": " << cases << " cases, " << failures << " failures";
    if (!first_counterexample.empty()) {
        s << "; first counterexample: " << first_counterexample;
    }
    return s.str();
}

namespace {

struct SpanInfo {
    uint32_t start = 0;
    uint32_t length = 0;
    bool present = false;

    uint64_t read(uint64_t state) const {
        return present ? (state >> start) & ((uint64_t{1} << length) - 1) : 0;
    }
    uint64_t write(uint64_t state, uint64_t value) const {
        if (!present) return state;
        uint64_t mask = ((uint64_t{1} << length) - 1) << start;
        return (state & ~mask) | (value << start);
    }
};

SpanInfo span_info(const RegisterLayout &layout, std::string_view name) {
    const Span *s = layout.find(name);
    if (s == nullptr) return {};
    return {s->start, s->length, true};
}

struct VerifyCaseContext {
    const Circuit *circuit;
    BuilderId id;
    uint32_t n;
    const VentLedger *ledger;  // streaming adder only
    SpanInfo target, clean, dirty, cin, ctrl;
    BranchPolicy policy;
};

void record_failure(VerifyReport &report, const std::string &what) {
    report.failures++;
    if (report.first_counterexample.empty()) {
        report.first_counterexample = what;
    }
}

std::string case_tag(uint64_t dv, uint64_t x, int c0, uint64_t g, int ctrl, uint64_t records) {
    std::ostringstream s;
    s << "d=" << dv << " x=" << x << " c0=" << c0 << " dirty=" << g << " ctrl=" << ctrl
      << " records=" << records;
    return s.str();
}

int ledger_phase(const VentLedger &ledger, uint64_t records, uint64_t sum, uint64_t dv, int c0,
                 uint32_t n) {
    CarryWord cw = carry_word(complement_mod(sum, n), dv, c0, n);
    int sign = 1;
    for (const auto &e : ledger.entries) {
        if ((records >> e.record_index & 1) && cw.bit(e.carry_bit_index)) {
            sign = -sign;
        }
    }
    return sign;
}

/// Checks every enumerated branch of one basis input.
void verify_one_input(const VerifyCaseContext &vc, uint64_t dv, uint64_t x, int c0, uint64_t g,
                      int ctrl_v, VerifyReport &report) {
    uint64_t input = 0;
    input = vc.target.write(input, x);
    input = vc.cin.write(input, static_cast<uint64_t>(c0));
    input = vc.dirty.write(input, g);
    input = vc.ctrl.write(input, static_cast<uint64_t>(ctrl_v));
    std::optional<OffsetConstant> d;
    if (!vc.circuit->bound_offset.has_value()) {
        d = OffsetConstant(dv, vc.n);
    }
    auto branches = run_on_basis(*vc.circuit, input, d, vc.policy);
    uint64_t eff = vc.ctrl.present && ctrl_v == 0 ? 0 : dv;
    double weight_total = 0;
    for (const auto &b : branches) {
        report.cases++;
        weight_total += b.weight;
        std::string tag = case_tag(dv, x, c0, g, ctrl_v, b.records);
        if (vc.id == BuilderId::CarryXor) {
            uint64_t want_g = g ^ (carry_word(x, eff, c0, vc.n).bits >> 1);
            if (vc.dirty.read(b.state) != want_g) {
                record_failure(report, "dirty mismatch at " + tag);
            }
            if (vc.target.read(b.state) != x || b.sign != 1) {
                record_failure(report, "target or phase disturbed at " + tag);
            }
        } else {
            uint64_t want = reference_add(x, eff, c0, vc.n);
            if (vc.target.read(b.state) != want) {
                record_failure(report, "sum mismatch at " + tag);
            }
            int want_sign = 1;
            if (vc.id == BuilderId::StreamingAdder) {
                want_sign = ledger_phase(*vc.ledger, b.records, want, eff, c0, vc.n);
            }
            if (b.sign != want_sign) {
                record_failure(report, "phase mismatch at " + tag);
            }
            if (vc.dirty.read(b.state) != g) {
                record_failure(report, "dirty not restored at " + tag);
            }
        }
        if (vc.clean.read(b.state) != 0) {
            record_failure(report, "clean ancilla not restored at " + tag);
        }
        if (vc.cin.read(b.state) != static_cast<uint64_t>(c0)) {
            record_failure(report, "carry_in disturbed at " + tag);
        }
    }
    if (vc.policy.mode == BranchPolicy::Mode::EnumerateAll &&
        std::abs(weight_total - 1.0) > 1e-9) {
        record_failure(report, "branch weights do not sum to 1 at d=" + std::to_string(dv));
    }
}

/// Uniform superposition over (target, dirty) at fixed c0/ctrl; every branch
/// must match the reference state up to a global phase. Streaming-adder
/// branches are corrected by the ledger phases first.
void verify_superposition(const VerifyCaseContext &vc, uint64_t dv, int c0, int ctrl_v,
                          VerifyReport &report) {
    uint64_t dim = uint64_t{1} << vc.circuit->qubit_count();
    std::vector<double> input(dim, 0.0);
    uint64_t count = uint64_t{1} << (vc.target.length + vc.dirty.length);
    double amp = 1.0 / std::sqrt(static_cast<double>(count));
    for (uint64_t x = 0; x < (uint64_t{1} << vc.target.length); x++) {
        for (uint64_t g = 0; g < (uint64_t{1} << vc.dirty.length); g++) {
            uint64_t i = 0;
            i = vc.target.write(i, x);
            i = vc.dirty.write(i, g);
            i = vc.cin.write(i, static_cast<uint64_t>(c0));
            i = vc.ctrl.write(i, static_cast<uint64_t>(ctrl_v));
            input[i] = amp;
        }
    }
    OffsetConstant d(dv, vc.n);
    std::vector<double> ref = reference_output_state(vc.circuit->layout, input, d, c0);
    std::optional<OffsetConstant> runtime_d;
    if (!vc.circuit->bound_offset.has_value()) {
        runtime_d = d;
    }
    auto branches = run(*vc.circuit, input, runtime_d, vc.policy);
    double weight_total = 0;
    uint64_t eff = vc.ctrl.present && ctrl_v == 0 ? 0 : dv;
    for (auto &b : branches) {
        report.cases++;
        weight_total += b.branch_weight;
        if (vc.id == BuilderId::StreamingAdder) {
            // Discharge the outstanding phases classically before comparing.
            for (uint64_t i = 0; i < b.amplitudes.size(); i++) {
                if (b.amplitudes[i] == 0.0) continue;
                uint64_t sum = vc.target.read(i);
                int cb = static_cast<int>(vc.cin.read(i));
                if (ledger_phase(*vc.ledger, b.records, sum, eff, cb, vc.n) < 0) {
                    b.amplitudes[i] = -b.amplitudes[i];
                }
            }
        }
        if (!equal_up_to_global_phase(b.amplitudes, ref, 1e-9)) {
            record_failure(report, "superposition phase test failed at d=" + std::to_string(dv) +
                                       " c0=" + std::to_string(c0) +
                                       " records=" + std::to_string(b.records));
        }
    }
    if (vc.policy.mode == BranchPolicy::Mode::EnumerateAll &&
        std::abs(weight_total - 1.0) > 1e-9) {
        record_failure(report, "superposition branch weights do not sum to 1");
    }
}

void merge_reports(VerifyReport &into, const VerifyReport &part) {
    into.cases += part.cases;
    into.failures += part.failures;
    if (into.first_counterexample.empty()) {
        into.first_counterexample = part.first_counterexample;
    }
}

}  // namespace

VerifyReport verify_builder(BuilderId id, const VerifyOptions &options) {
    uint32_t n = options.n;
    if (n < builder_min_width(id)) {
        throw WidthError("width below the builder's minimum");
    }
    Circuit symbolic = build_circuit(id, n);
    StreamingAdder stream;
    if (id == BuilderId::StreamingAdder) {
        stream = build_streaming_adder(n);
    }
    if (symbolic.qubit_count() + (options.controlled ? 1 : 0) > options.policy.max_qubits) {
        throw BudgetExceeded("verification at n=" + std::to_string(n) + " needs " +
                             std::to_string(symbolic.qubit_count()) + " qubits, budget is " +
                             std::to_string(options.policy.max_qubits));
    }

    std::vector<uint64_t> d_values = options.d_values;
    if (d_values.empty()) {
        if (n <= 8) {
            for (uint64_t v = 0; v < (uint64_t{1} << n); v++) d_values.push_back(v);
        } else {
            for (uint64_t i = 0; i < 32; i++) {
                d_values.push_back(splitmix64(options.seed ^ (i + 1)) & ((uint64_t{1} << n) - 1));
            }
        }
    }

    BranchPolicy policy = options.policy;
    if (policy.mode == BranchPolicy::Mode::EnumerateAll &&
        symbolic.measurement_count() > policy.enumerate_cap) {
        // Too many vents to enumerate; fall back to 64 seeded branches.
        policy = BranchPolicy::seeded_sample(options.seed, 64);
        policy.max_qubits = options.policy.max_qubits;
    }

    auto verify_chunk = [&](size_t lo, size_t hi, VerifyReport &report) {
        for (size_t di = lo; di < hi; di++) {
            uint64_t dv = d_values[di];
            Circuit circuit = options.controlled
                                  ? apply_control(symbolic, OffsetConstant(dv, n))
                                  : symbolic;
            VerifyCaseContext vc{
                &circuit,
                id,
                n,
                &stream.ledger,
                span_info(circuit.layout, "target"),
                span_info(circuit.layout, "clean"),
                span_info(circuit.layout, "dirty"),
                span_info(circuit.layout, "carry_in"),
                span_info(circuit.layout, "control"),
                policy,
            };
            uint64_t xs = uint64_t{1} << n;
            uint64_t gs = uint64_t{1} << vc.dirty.length;
            uint64_t total = xs * gs * 2;
            std::vector<uint64_t> cases;
            if (options.exhaustive_inputs && total <= (uint64_t{1} << 16)) {
                for (uint64_t k = 0; k < total; k++) cases.push_back(k);
            } else {
                for (uint32_t k = 0; k < options.sampled_inputs; k++) {
                    cases.push_back(splitmix64(options.seed ^ dv ^ (k * 0x9e37ULL)) % total);
                }
            }
            int ctrl_values = options.controlled ? 2 : 1;
            for (uint64_t k : cases) {
                uint64_t x = k % xs;
                uint64_t g = (k / xs) % gs;
                int c0 = static_cast<int>(k / (xs * gs));
                for (int cv = 0; cv < ctrl_values; cv++) {
                    verify_one_input(vc, dv, x, c0, g, options.controlled ? cv : 1, report);
                }
            }
            // The carry-xor is measurement-free and classical-reversible, so
            // the basis sweep is complete; the phase test applies to adders.
            if (options.superposition_test && id != BuilderId::CarryXor) {
                for (int c0 = 0; c0 < 2; c0++) {
                    for (int cv = 0; cv < ctrl_values; cv++) {
                        verify_superposition(vc, dv, c0, options.controlled ? cv : 1, report);
                    }
                }
            }
        }
    };

    uint32_t threads = options.threads == 0 ? std::thread::hardware_concurrency()
                                            : options.threads;
    threads = std::max(1u, std::min<uint32_t>(threads, d_values.size()));
    VerifyReport report;
    if (threads <= 1) {
        verify_chunk(0, d_values.size(), report);
        return report;
    }
    std::vector<VerifyReport> parts(threads);
    std::vector<std::thread> pool;
    size_t chunk = (d_values.size() + threads - 1) / threads;
    for (uint32_t t = 0; t < threads; t++) {
        size_t lo = t * chunk;
        size_t hi = std::min(d_values.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi, t]() { verify_chunk(lo, hi, parts[t]); });
    }
    for (auto &th : pool) th.join();
    for (const auto &p : parts) merge_reports(report, p);
    return report;
}

}  // namespace ventadd
