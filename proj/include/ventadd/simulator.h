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

#ifndef VENTADD_SIMULATOR_H
#define VENTADD_SIMULATOR_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ventadd/builders.h"
#include "ventadd/circuit.h"
#include "ventadd/core.h"

namespace ventadd {

/// One measurement branch of a simulation. The gate set {X, CX, CCX, Z,
/// classically conditioned variants, X-basis measurement} is real, so
/// amplitudes carry no imaginary part at all. The vector is renormalized
/// after every measurement projection.
struct SimState {
    std::vector<double> amplitudes;
    uint64_t records = 0;
    double branch_weight = 1.0;
};

struct BranchPolicy {
    enum class Mode {
        EnumerateAll,
        SeededSample,
        Forced,
    };

    Mode mode = Mode::EnumerateAll;
    uint64_t seed = 0;
    uint32_t sample_count = 1;
    uint64_t forced_records = 0;
    /// EnumerateAll refuses circuits with more measurements than this.
    uint32_t enumerate_cap = 12;
    /// Simulations refuse circuits with more qubits than this.
    uint32_t max_qubits = 22;

    static BranchPolicy enumerate_all() { return {}; }
    static BranchPolicy seeded_sample(uint64_t seed, uint32_t count);
    static BranchPolicy forced(uint64_t records);
};

/// A branch of a run whose input was a computational basis state: the state
/// stays a signed basis vector throughout, so only the index and sign are
/// tracked. Exhaustive verification sweeps use this directly.
struct BasisBranch {
    uint64_t state = 0;
    int sign = 1;
    double weight = 1.0;
    uint64_t records = 0;
};

/// Dense state-vector execution with X-basis measurement and classical
/// feedback. Offset terms are resolved against `d`; omit it only for bound
/// circuits. Branch weights of an EnumerateAll run sum to 1.
std::vector<SimState> run(const Circuit &circuit, const std::vector<double> &input,
                          std::optional<OffsetConstant> d = {},
                          const BranchPolicy &policy = {});

/// Same, for a computational basis input given as an index.
std::vector<SimState> run(const Circuit &circuit, uint64_t basis_input,
                          std::optional<OffsetConstant> d = {},
                          const BranchPolicy &policy = {});

/// Tracked-basis execution; exact, and O(instructions) per branch.
std::vector<BasisBranch> run_on_basis(const Circuit &circuit, uint64_t basis_input,
                                      std::optional<OffsetConstant> d = {},
                                      const BranchPolicy &policy = {});

/// Permutes amplitudes by x -> (x + d + c0) mod 2^n. Introduces no phases.
std::vector<double> reference_unitary_apply(uint32_t n, const OffsetConstant &d, int c0,
                                            const std::vector<double> &state);

/// True iff |<a|b>| >= 1 - tol. With real amplitudes the global phase is +-1.
bool equal_up_to_global_phase(const std::vector<double> &a, const std::vector<double> &b,
                              double tol);

/// Reference adder action on a full-register state: the target span is
/// permuted by x -> x + d_eff + c0, where c0 comes from the carry_in span
/// (or `carry_in_const` when the layout has none) and d_eff is d gated by
/// the control span when one is present.
std::vector<double> reference_output_state(const RegisterLayout &layout,
                                           const std::vector<double> &input,
                                           const OffsetConstant &d, int carry_in_const = 0);

enum class BuilderId {
    StreamingAdder,
    CarryXor,
    Adder2CleanNDirty,
    Adder3Clean,
};

const char *builder_name(BuilderId id);
std::optional<BuilderId> builder_from_name(std::string_view name);
uint32_t builder_min_width(BuilderId id);
/// Builds the named circuit at width n (ledger discarded for the stream).
Circuit build_circuit(BuilderId id, uint32_t n, const AdderOptions &options = {});

struct VerifyOptions {
    uint32_t n = 4;
    /// Offsets to test; empty means every d for n <= 8, else 32 seeded picks.
    std::vector<uint64_t> d_values;
    /// Verify the apply_control variant instead of the plain builder.
    bool controlled = false;
    BranchPolicy policy;
    /// Sweep every (x, c0, dirty) input; otherwise sample `sampled_inputs`.
    bool exhaustive_inputs = true;
    uint32_t sampled_inputs = 64;
    /// Also run the uniform-superposition phase test per offset.
    bool superposition_test = true;
    uint64_t seed = 0;
    uint32_t threads = 0;  // 0 = hardware concurrency
};

struct VerifyReport {
    uint64_t cases = 0;
    uint64_t failures = 0;
    std::string first_counterexample;

    bool passed() const { return failures == 0; }
    std::string summary() const;
};

/// Runs the correctness matrix for a builder: function value against the
/// reference adder on every branch, ancilla restoration, branch-weight
/// accounting, and the superposition phase test. Streaming-adder branches
/// are compared after applying the outstanding ledger phases.
VerifyReport verify_builder(BuilderId id, const VerifyOptions &options);

}  // namespace ventadd

#endif
