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
 * Dense statevector simulation of compiled circuits, Fock-basis outcome
 * distributions, and seeded multinomial shot sampling.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "circuit.hpp"
#include "fock.hpp"
#include "gate.hpp"

namespace fockc {

/// Largest register the simulator accepts (2^26 amplitudes = 1 GiB).
inline constexpr std::size_t kMaxSimulatedQubits = 26;

struct StateVector {
    std::size_t qubits = 0;
    std::vector<Complex> amplitudes;

    [[nodiscard]] double norm() const {
        double acc = 0.0;
        for (const auto &a : amplitudes) {
            acc += std::norm(a);
        }
        return std::sqrt(acc);
    }
};

struct OutcomeDistribution {
    std::map<FockState, double> entries;
    double residual = 0.0; ///< mass outside the expected photon sector

    [[nodiscard]] double total() const {
        double acc = residual;
        for (const auto &[state, p] : entries) {
            acc += p;
        }
        return acc;
    }
};

/// Checks that `input` is a legal register state for `layout`: one entry per
/// mode, each occupation and the total at most the photon budget.
inline void validate_input(const FockState &input, const CircuitLayout &layout) {
    if (input.modes() != layout.modes) {
        throw EncodingError("input has " + std::to_string(input.modes()) + " modes, circuit has " +
                            std::to_string(layout.modes));
    }
    const std::size_t n = layout.config.photons();
    if (input.total() > n) {
        throw EncodingError("input carries " + std::to_string(input.total()) +
                            " photons, circuit was compiled for " + std::to_string(n));
    }
}

[[nodiscard]] inline StateVector run(const Circuit &c, const FockState &input) {
    if (c.qubits > kMaxSimulatedQubits) {
        throw SizeError("run: " + std::to_string(c.qubits) + " qubits exceeds the " +
                        std::to_string(kMaxSimulatedQubits) + "-qubit simulator ceiling");
    }
    validate_input(input, c.layout);
    StateVector v;
    v.qubits = c.qubits;
    v.amplitudes.assign(std::size_t{1} << c.qubits, Complex{0.0});
    v.amplitudes[encode_fock(input, c.layout.config)] = Complex{1.0};
    for (const auto &g : c.gates) {
        apply_gate(v.amplitudes, g);
    }
    return v;
}

/// Groups |amplitude|^2 by occupation vector. Every state with exactly
/// `photons` photons is listed (including zeros); all other mass, such as
/// padded occupations or a different photon number, goes to `residual`.
[[nodiscard]] inline OutcomeDistribution probabilities(const StateVector &v, std::size_t modes,
                                                       const TruncationConfig &config,
                                                       std::size_t photons) {
    OutcomeDistribution dist;
    for (auto &s : enumerate_fock_states(modes, photons)) {
        dist.entries.emplace(std::move(s), 0.0);
    }
    for (std::size_t index = 0; index < v.amplitudes.size(); ++index) {
        const double p = std::norm(v.amplitudes[index]);
        if (p == 0.0) {
            continue;
        }
        const FockState s = decode_fock(index, modes, config);
        const bool in_range =
            std::all_of(s.occupations.begin(), s.occupations.end(),
                        [&](std::size_t occ) { return occ <= config.photons(); });
        auto it = in_range ? dist.entries.find(s) : dist.entries.end();
        if (it != dist.entries.end()) {
            it->second += p;
        } else {
            dist.residual += p;
        }
    }
    return dist;
}

/// Multinomial draw by inverse CDF over the sorted outcomes. Uniforms are
/// built from the top 53 bits of mt19937_64, so counts depend only on seed.
[[nodiscard]] inline std::map<FockState, std::size_t>
sample(const OutcomeDistribution &dist, std::size_t shots, std::uint64_t seed) {
    std::map<FockState, std::size_t> counts;
    std::vector<const FockState *> states;
    std::vector<double> cdf;
    double acc = 0.0;
    for (const auto &[state, p] : dist.entries) {
        counts.emplace(state, 0);
        acc += std::max(p, 0.0);
        states.push_back(&state);
        cdf.push_back(acc);
    }
    if (states.empty() || acc <= 0.0) {
        return counts;
    }
    std::mt19937_64 gen(seed);
    for (std::size_t shot = 0; shot < shots; ++shot) {
        const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        ++counts[*states[static_cast<std::size_t>(it - cdf.begin())]];
    }
    return counts;
}

} // namespace fockc
