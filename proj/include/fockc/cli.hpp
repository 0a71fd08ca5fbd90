// Copyright 2026 The fockc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Command implementations behind the `fockc` executable. Each command takes
 * a plain options struct and returns a process exit code:
 *
 *   0  success
 *   1  file could not be read or written
 *   2  invalid input (non-unitary matrix, bad occupation, malformed file)
 *   3  resource guard (synthesis width, simulator ceiling)
 *   4  verification mismatch (circuit disagrees with the permanent oracle)
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "compiler.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "sim.hpp"

namespace fockc::cli {

enum ExitCode : int {
    kOk = 0,
    kIoFailure = 1,
    kInvalidInput = 2,
    kResourceGuard = 3,
    kVerificationMismatch = 4,
};

/// Loose tolerance for user-supplied matrices, which carry serialization
/// rounding; accepted matrices are projected back onto the unitary group.
inline constexpr double kIngestTolerance = 1e-8;
/// Widest beamsplitter block (2w qubits) the compiler will synthesize.
inline constexpr std::size_t kMaxBlockQubits = 12;
/// Per-outcome agreement required by `verify`.
inline constexpr double kVerifyTolerance = 1e-9;

struct InterferometerSource {
    std::optional<std::string> unitary_path;
    std::optional<std::size_t> random_modes;
    std::uint64_t seed = 0;
    bool strict = false; ///< require 1e-10 unitarity, no projection
};

struct CompileOptions {
    InterferometerSource source;
    std::size_t photons = 1;
    ExpansionMode mode = ExpansionMode::PadToPowerOfTwo;
    std::string qasm_out;
    std::string report_out;
};

struct SimulateOptions {
    std::string circuit_path;
    std::string input;
    std::size_t shots = 0;
    std::uint64_t seed = 0;
    std::string out; ///< empty: write JSON to stdout
};

struct VerifyOptions {
    InterferometerSource source;
    std::size_t photons = 1;
    ExpansionMode mode = ExpansionMode::PadToPowerOfTwo;
    std::string input;
    std::size_t shots = 0;
    std::uint64_t shot_seed = 0;
};

struct ScalingOptions {
    std::size_t modes = 2;
    std::string photons_list;
    std::size_t samples = 1;
    std::uint64_t seed = 0;
    ExpansionMode mode = ExpansionMode::PadToPowerOfTwo;
    std::string csv_out;
};

inline constexpr const char *kScalingHeader =
    "n,sample,qubits,depth,cnot_count,matrix_exponentiation_ms,circuit_synthesis_ms";

namespace detail {

/// Maps library exceptions onto exit codes and reports them on `err`.
template <typename Fn> int guarded(std::ostream &err, Fn &&fn) {
    try {
        return fn();
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kIoFailure;
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const SizeError &e) {
        err << "error: " << e.what() << "\n";
        return kResourceGuard;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }
}

inline ComplexMatrix load_interferometer(const InterferometerSource &src, std::ostream &err) {
    if (src.unitary_path.has_value() == src.random_modes.has_value()) {
        throw ParseError("give exactly one of --unitary FILE or --random-modes M");
    }
    if (src.random_modes) {
        return haar_random_unitary(*src.random_modes, src.seed);
    }
    const ComplexMatrix u = read_unitary_file(*src.unitary_path);
    const double tol = src.strict ? tolerance::unitarity : kIngestTolerance;
    const auto report = check_unitary(u, tol);
    if (!report.passed) {
        throw ValidationError("'" + *src.unitary_path +
                                  "' is not unitary: max_deviation = " +
                                  fockc::detail::format_double(report.max_deviation),
                              report.max_deviation);
    }
    if (src.strict) {
        return u;
    }
    if (report.max_deviation > tolerance::unitarity) {
        err << "note: projected input onto the unitary group (max_deviation = "
            << fockc::detail::format_double(report.max_deviation) << ")\n";
    }
    return polar_project(u);
}

inline void check_block_width(const TruncationConfig &config) {
    if (2 * config.qubits_per_mode() > kMaxBlockQubits) {
        throw SizeError("photon number " + std::to_string(config.photons()) + " needs " +
                        std::to_string(2 * config.qubits_per_mode()) +
                        "-qubit beamsplitter blocks; the synthesis guard is " +
                        std::to_string(kMaxBlockQubits));
    }
}

inline std::vector<std::size_t> parse_photon_list(const std::string &text) {
    const FockState parsed = parse_occupations(text);
    return parsed.occupations;
}

inline double total_variation(const OutcomeDistribution &a, const OutcomeDistribution &b) {
    double acc = 0.0;
    for (const auto &[state, p] : a.entries) {
        const auto it = b.entries.find(state);
        acc += std::abs(p - (it == b.entries.end() ? 0.0 : it->second));
    }
    for (const auto &[state, q] : b.entries) {
        if (!a.entries.contains(state)) {
            acc += q;
        }
    }
    return 0.5 * acc;
}

} // namespace detail

inline int cmd_compile(const CompileOptions &opt, std::ostream &out, std::ostream &err) {
    return detail::guarded(err, [&] {
        const TruncationConfig config(opt.photons, opt.mode);
        detail::check_block_width(config);
        const ComplexMatrix u = detail::load_interferometer(opt.source, err);
        const auto compiled = compile_interferometer(u, config);
        const std::optional<std::uint64_t> seed =
            opt.source.random_modes ? std::optional(opt.source.seed) : std::nullopt;
        const json report = compile_report_json(compiled, config, seed);
        if (!opt.qasm_out.empty()) {
            write_text_file(opt.qasm_out, export_qasm(compiled.circuit));
        }
        if (!opt.report_out.empty()) {
            write_text_file(opt.report_out, report.dump(2) + "\n");
        }
        out << "compiled " << compiled.decomposition.modes << " modes, n = " << config.photons()
            << ": " << report["qubit_count"] << " qubits, depth " << report["depth"] << ", "
            << report["cnot_count"] << " CNOTs\n";
        return static_cast<int>(kOk);
    });
}

/// Layout for circuits written by other tools: one register per input
/// entry, photon budget = register capacity.
inline CircuitLayout infer_layout(const Circuit &c, std::size_t modes) {
    if (modes == 0 || c.qubits % modes != 0) {
        throw EncodingError("cannot split " + std::to_string(c.qubits) + " qubits into " +
                            std::to_string(modes) + " mode registers");
    }
    const std::size_t w = c.qubits / modes;
    return {modes, TruncationConfig((std::size_t{1} << w) - 1, ExpansionMode::ExpandTruncation)};
}

inline int cmd_simulate(const SimulateOptions &opt, std::ostream &out, std::ostream &err) {
    return detail::guarded(err, [&] {
        Circuit circuit = parse_qasm(read_text_file(opt.circuit_path));
        const FockState input = parse_occupations(opt.input);
        if (circuit.layout.modes == 0) {
            circuit.layout = infer_layout(circuit, input.modes());
        }
        const auto &layout = circuit.layout;
        const StateVector state = run(circuit, input);
        const OutcomeDistribution dist =
            probabilities(state, layout.modes, layout.config, input.total());
        const auto counts = sample(dist, opt.shots, opt.seed);
        const json doc = {
            {"modes", layout.modes},
            {"photons", layout.config.photons()},
            {"qubits", circuit.qubits},
            {"input", input.occupations},
            {"shots", opt.shots},
            {"seed", opt.seed},
            {"probabilities", distribution_json(dist)},
            {"residual", dist.residual},
            {"counts", counts_json(counts)},
        };
        const std::string text = doc.dump(2) + "\n";
        if (opt.out.empty()) {
            out << text;
        } else {
            write_text_file(opt.out, text);
        }
        return static_cast<int>(kOk);
    });
}

inline int cmd_verify(const VerifyOptions &opt, std::ostream &out, std::ostream &err) {
    return detail::guarded(err, [&] {
        const TruncationConfig config(opt.photons, opt.mode);
        detail::check_block_width(config);
        const FockState input = parse_occupations(opt.input);
        const ComplexMatrix u = detail::load_interferometer(opt.source, err);
        if (input.modes() != static_cast<std::size_t>(u.rows())) {
            throw EncodingError("input has " + std::to_string(input.modes()) +
                                " entries for a " + std::to_string(u.rows()) + "-mode unitary");
        }
        const auto compiled = compile_interferometer(u, config);
        const StateVector state = run(compiled.circuit, input);
        const OutcomeDistribution simulated =
            probabilities(state, compiled.decomposition.modes, config, input.total());
        const OutcomeDistribution exact = exact_distribution(u, input);

        double max_error = 0.0;
        for (const auto &[state_t, p] : exact.entries) {
            max_error = std::max(max_error, std::abs(p - simulated.entries.at(state_t)));
        }
        const double tvd = detail::total_variation(simulated, exact);

        out << std::setprecision(3) << std::scientific;
        out << "qubits: " << compiled.circuit.qubits << "\n";
        out << "outcomes: " << exact.entries.size() << "\n";
        out << "max_abs_error: " << max_error << "\n";
        out << "total_variation: " << tvd << "\n";
        out << "residual: " << simulated.residual << "\n";
        if (opt.shots > 0) {
            const auto counts = sample(simulated, opt.shots, opt.shot_seed);
            OutcomeDistribution empirical;
            for (const auto &[state_t, c] : counts) {
                empirical.entries.emplace(state_t, static_cast<double>(c) /
                                                       static_cast<double>(opt.shots));
            }
            out << "sampled_total_variation: " << detail::total_variation(empirical, exact)
                << " (" << opt.shots << " shots)\n";
        }
        out << std::defaultfloat;
        const bool ok = max_error <= kVerifyTolerance;
        out << (ok ? "PASS" : "FAIL") << "\n";
        return static_cast<int>(ok ? kOk : kVerificationMismatch);
    });
}

inline int cmd_scaling(const ScalingOptions &opt, std::ostream &out, std::ostream &err) {
    return detail::guarded(err, [&] {
        const auto photon_list = detail::parse_photon_list(opt.photons_list);
        if (opt.modes < 2) {
            throw ParseError("--modes must be at least 2");
        }
        for (const std::size_t n : photon_list) {
            detail::check_block_width(TruncationConfig(n, opt.mode));
        }
        std::vector<std::size_t> sorted = photon_list;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

        std::ostringstream csv;
        csv << kScalingHeader << "\n";
        for (const std::size_t n : sorted) {
            const TruncationConfig config(n, opt.mode);
            for (std::size_t s = 0; s < opt.samples; ++s) {
                // The same interferometer per sample index across all n.
                const ComplexMatrix u = haar_random_unitary(opt.modes, opt.seed + s);
                const auto compiled = compile_interferometer(u, config);
                const CircuitStats st = stats(compiled.circuit);
                csv << n << "," << s << "," << st.qubit_count << "," << st.depth << ","
                    << st.cnot_count << "," << fockc::detail::format_double(compiled.timings.matrix_exponentiation_ms)
                    << "," << fockc::detail::format_double(compiled.timings.circuit_synthesis_ms) << "\n";
                out << "n=" << n << " sample=" << s << " depth=" << st.depth << "\n";
            }
        }
        write_text_file(opt.csv_out, csv.str());
        return static_cast<int>(kOk);
    });
}

} // namespace fockc::cli
