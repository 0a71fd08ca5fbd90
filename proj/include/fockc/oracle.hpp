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
 * Exact multi-photon transition amplitudes from matrix permanents. This is
 * the ground truth the compiled circuits are checked against, and it shares
 * no code with the compilation path beyond the matrix type.
 */

#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "fock.hpp"
#include "linalg.hpp"
#include "sim.hpp"

namespace fockc {

inline constexpr std::size_t kMaxPermanentSize = 20;
inline constexpr std::size_t kMaxOracleModes = 12;

/// Ryser's formula with Gray-code subset order, O(2^n n).
[[nodiscard]] inline Complex permanent(const ComplexMatrix &a) {
    require_square(a, "permanent");
    const auto n = static_cast<std::size_t>(a.rows());
    if (n > kMaxPermanentSize) {
        throw SizeError("permanent: " + std::to_string(n) + "x" + std::to_string(n) +
                        " exceeds the 20x20 guard");
    }
    if (n == 0) {
        return Complex{1.0};
    }
    std::vector<Complex> row_sums(n, Complex{0.0});
    Complex total{0.0};
    std::uint64_t gray = 0;
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const auto col = static_cast<Eigen::Index>(std::countr_zero(k));
        const std::uint64_t bit = std::uint64_t{1} << col;
        const bool adding = (gray & bit) == 0;
        gray ^= bit;
        Complex prod{1.0};
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = static_cast<Eigen::Index>(i);
            row_sums[i] += adding ? a(row, col) : -a(row, col);
            prod *= row_sums[i];
        }
        total += (std::popcount(gray) % 2 == 0) ? prod : -prod;
    }
    return (n % 2 == 0) ? total : -total;
}

[[nodiscard]] inline double factorial(std::size_t k) {
    double f = 1.0;
    for (std::size_t i = 2; i <= k; ++i) {
        f *= static_cast<double>(i);
    }
    return f;
}

/// <output| U^(n) |input>: per(W) / sqrt(prod s_i! prod t_j!), where W takes
/// row j of U t_j times and column i of U s_i times. Zero when the photon
/// numbers differ.
[[nodiscard]] inline Complex transition_amplitude(const ComplexMatrix &u, const FockState &input,
                                                  const FockState &output) {
    require_square(u, "transition_amplitude");
    const auto m = static_cast<std::size_t>(u.rows());
    if (input.modes() != m || output.modes() != m) {
        throw DimensionError("transition_amplitude: occupation vectors must have one entry per mode");
    }
    const std::size_t photons = input.total();
    if (output.total() != photons) {
        return Complex{0.0};
    }
    if (photons > kMaxPermanentSize) {
        throw SizeError("transition_amplitude: more than 20 photons");
    }
    std::vector<Eigen::Index> rows, cols;
    double norm = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        cols.insert(cols.end(), input.occupations[i], static_cast<Eigen::Index>(i));
        rows.insert(rows.end(), output.occupations[i], static_cast<Eigen::Index>(i));
        norm *= factorial(input.occupations[i]) * factorial(output.occupations[i]);
    }
    const auto n = static_cast<Eigen::Index>(photons);
    ComplexMatrix w(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            w(r, c) = u(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
        }
    }
    return permanent(w) / std::sqrt(norm);
}

[[nodiscard]] inline OutcomeDistribution exact_distribution(const ComplexMatrix &u,
                                                            const FockState &input) {
    require_square(u, "exact_distribution");
    const auto m = static_cast<std::size_t>(u.rows());
    if (m > kMaxOracleModes) {
        throw SizeError("exact_distribution: more than 12 modes");
    }
    if (input.total() > kMaxPermanentSize) {
        throw SizeError("exact_distribution: more than 20 photons");
    }
    OutcomeDistribution dist;
    for (auto &t : enumerate_fock_states(m, input.total())) {
        const double p = std::norm(transition_amplitude(u, input, t));
        dist.entries.emplace(std::move(t), p);
    }
    return dist;
}

} // namespace fockc
