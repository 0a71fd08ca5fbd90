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

#pragma once

#include <chrono>
#include <vector>

#include "circuit.hpp"
#include "clements.hpp"
#include "fock.hpp"
#include "synth.hpp"

namespace fockc {

struct CompileTimings {
    double matrix_exponentiation_ms = 0.0; ///< log, ladder lift and exponential
    double circuit_synthesis_ms = 0.0;     ///< synthesis and assembly
    double total_ms = 0.0;
};

struct CompiledInterferometer {
    ClementsDecomposition decomposition;
    std::vector<SynthesisResult> blocks;
    std::vector<SynthesisResult> mode_phases;
    Circuit circuit;
    CompileTimings timings;
};

namespace detail {
using Clock = std::chrono::steady_clock;

inline double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}
} // namespace detail

/// Decompose, lift every beamsplitter to the truncated Fock space,
/// synthesize each lifted block and the output phases, then assemble.
[[nodiscard]] inline CompiledInterferometer compile_interferometer(const ComplexMatrix &u,
                                                                   const TruncationConfig &config) {
    const auto start = detail::Clock::now();
    CompiledInterferometer out;
    out.decomposition = decompose(u);

    out.blocks.reserve(out.decomposition.elements.size());
    for (const auto &element : out.decomposition.elements) {
        const auto t0 = detail::Clock::now();
        const TruncatedUnitary lifted = truncated_beamsplitter_unitary(element, config);
        out.timings.matrix_exponentiation_ms += detail::elapsed_ms(t0);

        const auto t1 = detail::Clock::now();
        out.blocks.push_back(synthesize(lifted.matrix));
        out.timings.circuit_synthesis_ms += detail::elapsed_ms(t1);
    }

    const auto t2 = detail::Clock::now();
    out.mode_phases.reserve(out.decomposition.modes);
    for (const double alpha : out.decomposition.output_phases) {
        out.mode_phases.push_back(synthesize_diagonal(mode_phase_diagonal(alpha, config)));
    }
    out.circuit = assemble(out.decomposition, out.blocks, out.mode_phases, config);
    out.timings.circuit_synthesis_ms += detail::elapsed_ms(t2);

    out.timings.total_ms = detail::elapsed_ms(start);
    return out;
}

} // namespace fockc
