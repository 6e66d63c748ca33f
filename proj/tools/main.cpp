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

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ventadd/builders.h"
#include "ventadd/errors.h"
#include "ventadd/resources.h"
#include "ventadd/serialize.h"
#include "ventadd/simulator.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFlagError = 1;
constexpr int kExitVerifyFailed = 2;
constexpr int kExitBudgetExceeded = 3;

struct CommonFlags {
    std::string builder;
    uint32_t n = 0;
    int64_t d = -1;  // -1 = symbolic
    bool controlled = false;
    int carry_in_const = -1;  // -1 = live qubit
};

uint32_t default_sim_budget() {
    if (const char *env = std::getenv("VENTADD_SIM_BUDGET")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 30) {
            return static_cast<uint32_t>(v);
        }
        std::cerr << "ignoring bad VENTADD_SIM_BUDGET value '" << env << "'\n";
    }
    return 22;
}

void add_common(CLI::App *cmd, CommonFlags &flags) {
    cmd->add_option("builder", flags.builder, "one of stream, carryxor, add2c, add3c")
        ->required();
    cmd->add_option("--n", flags.n, "register width")->required();
    cmd->add_option("--d", flags.d, "offset constant (omit for symbolic)");
    cmd->add_flag("--controlled", flags.controlled, "apply a control qubit (requires --d)");
    cmd->add_option("--carry-in-const", flags.carry_in_const,
                    "replace the carry-in qubit with this constant bit")
        ->check(CLI::Range(0, 1));
}

ventadd::BuilderId parse_builder(const std::string &name) {
    auto id = ventadd::builder_from_name(name);
    if (!id.has_value()) {
        throw CLI::ValidationError("builder", "unknown builder '" + name + "'");
    }
    return *id;
}

ventadd::Circuit build_from_flags(const CommonFlags &flags) {
    ventadd::AdderOptions options;
    if (flags.carry_in_const >= 0) {
        options.carry_in_const = flags.carry_in_const != 0;
    }
    ventadd::Circuit c = ventadd::build_circuit(parse_builder(flags.builder), flags.n, options);
    if (flags.controlled) {
        if (flags.d < 0) {
            throw CLI::ValidationError("--controlled", "requires --d");
        }
        return ventadd::apply_control(
            c, ventadd::OffsetConstant(static_cast<uint64_t>(flags.d), flags.n));
    }
    if (flags.d >= 0) {
        return ventadd::bind_offset(
            c, ventadd::OffsetConstant(static_cast<uint64_t>(flags.d), flags.n));
    }
    return c;
}

bool parse_range(const std::string &text, uint32_t &lo, uint32_t &hi) {
    size_t dots = text.find("..");
    if (dots == std::string::npos) return false;
    try {
        lo = std::stoul(text.substr(0, dots));
        hi = std::stoul(text.substr(dots + 2));
    } catch (const std::exception &) {
        return false;
    }
    return lo <= hi;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Builders and verification tooling for constant-workspace classical-quantum adders"};
    app.require_subcommand(1);

    CommonFlags emit_flags;
    std::string emit_format = "structured";
    CLI::App *emit = app.add_subcommand("emit", "print a circuit document");
    add_common(emit, emit_flags);
    emit->add_option("--format", emit_format, "structured or text-diagram")
        ->check(CLI::IsMember({"structured", "text-diagram"}));

    CommonFlags verify_flags;
    bool verify_exhaustive = false;
    bool verify_no_super = false;
    std::string branch_mode = "enumerate";
    uint64_t seed = 0;
    uint32_t samples = 64;
    CLI::App *verify = app.add_subcommand("verify", "simulate against the reference oracles");
    add_common(verify, verify_flags);
    verify->add_flag("--exhaustive", verify_exhaustive,
                     "sweep every offset and input (default: every offset for n <= 8)");
    verify->add_flag("--no-superposition", verify_no_super, "skip the superposition phase test");
    verify->add_option("--branches", branch_mode, "enumerate or sample")
        ->check(CLI::IsMember({"enumerate", "sample"}));
    verify->add_option("--seed", seed, "seed for sampled branches and inputs");
    verify->add_option("--samples", samples, "sampled branch count in sample mode");

    CommonFlags count_flags;
    CLI::App *count_cmd = app.add_subcommand("count", "print the resource report");
    add_common(count_cmd, count_flags);

    std::string sweep_builder;
    std::string sweep_range;
    uint32_t sweep_slope = 0;
    CLI::App *sweep = app.add_subcommand("sweep", "resource table over a width range");
    sweep->add_option("builder", sweep_builder, "one of stream, carryxor, add2c, add3c")
        ->required();
    sweep->add_option("--n-range", sweep_range, "width range, e.g. 4..24")->required();
    sweep->add_option("--slope", sweep_slope,
                      "expected Toffolis per bit (default: the builder's nominal slope)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitFlagError;
    }

    try {
        if (emit->parsed()) {
            ventadd::Circuit c = build_from_flags(emit_flags);
            if (emit_format == "structured") {
                std::cout << ventadd::circuit_to_text(c);
            } else {
                std::cout << ventadd::render_diagram(c);
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            ventadd::VerifyOptions options;
            options.n = verify_flags.n;
            options.controlled = verify_flags.controlled;
            options.seed = seed;
            options.exhaustive_inputs = true;
            options.superposition_test = !verify_no_super;
            options.policy.max_qubits = default_sim_budget();
            if (branch_mode == "sample") {
                options.policy = ventadd::BranchPolicy::seeded_sample(seed, samples);
                options.policy.max_qubits = default_sim_budget();
            }
            if (verify_flags.d >= 0) {
                options.d_values = {static_cast<uint64_t>(verify_flags.d)};
            } else if (verify_exhaustive) {
                for (uint64_t v = 0; v < (uint64_t{1} << verify_flags.n); v++) {
                    options.d_values.push_back(v);
                }
            }
            ventadd::BuilderId id = parse_builder(verify_flags.builder);
            ventadd::VerifyReport report = ventadd::verify_builder(id, options);
            std::cout << ventadd::builder_name(id) << " n=" << options.n << " "
                      << report.summary() << "\n";
            return report.passed() ? kExitOk : kExitVerifyFailed;
        }

        if (count_cmd->parsed()) {
            ventadd::Circuit c = build_from_flags(count_flags);
            ventadd::ResourceReport r = ventadd::count(c);
            nlohmann::json j{{"toffoli", r.toffoli_count}, {"cx", r.cx_count},
                             {"x", r.x_count},             {"z", r.z_count},
                             {"measure", r.measure_count}, {"clean", r.clean_ancillae},
                             {"dirty", r.dirty_ancillae},  {"depth", r.depth},
                             {"n", r.n}};
            if (r.offset.has_value()) j["offset"] = *r.offset;
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (sweep->parsed()) {
            uint32_t lo = 0, hi = 0;
            if (!parse_range(sweep_range, lo, hi)) {
                std::cerr << "bad --n-range, expected e.g. 4..24\n";
                return kExitFlagError;
            }
            ventadd::BuilderId id = parse_builder(sweep_builder);
            uint32_t nominal_slope[] = {1, 2, 3, 4};
            uint32_t slope = sweep_slope != 0 ? sweep_slope
                                              : nominal_slope[static_cast<int>(id)];
            lo = std::max(lo, ventadd::builder_min_width(id));
            if (lo > hi) {
                std::cerr << "range is below the builder's minimum width\n";
                return kExitFlagError;
            }
            std::cout << ventadd::resource_table(id, lo, hi, slope);
            ventadd::LinearityReport fit = ventadd::linearity_check(id, lo, hi, slope);
            std::cout << "residual range [" << fit.min_residual << ", " << fit.max_residual
                      << "], spread " << fit.spread() << (fit.passes() ? " (bounded)" : " (UNBOUNDED)")
                      << "\n";
            return fit.passes() ? kExitOk : kExitVerifyFailed;
        }
    } catch (const CLI::ValidationError &e) {
        std::cerr << e.what() << "\n";
        return kExitFlagError;
    } catch (const ventadd::BudgetExceeded &e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const ventadd::WidthError &e) {
        std::cerr << "width error: " << e.what() << "\n";
        return kExitFlagError;
    } catch (const ventadd::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitFlagError;
}
