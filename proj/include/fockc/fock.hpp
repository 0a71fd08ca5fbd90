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
 * Truncated bosonic Fock space on qubit registers.
 *
 * Each optical mode owns a register of w qubits holding its occupation in
 * binary; mode 0 is the least significant register, and within a register
 * bit 0 is the least significant bit. A basis state (s_0, ..., s_{m-1}) is
 * therefore encoded as sum_i s_i * d^i with d = 2^w.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "clements.hpp"
#include "linalg.hpp"

namespace fockc {

enum class ExpansionMode {
    PadToPowerOfTwo, ///< ladder operators truncated at n, zero-padded to 2^w
    ExpandTruncation ///< ladder operators truncated at 2^w - 1
};

[[nodiscard]] inline std::string_view to_string(ExpansionMode mode) {
    return mode == ExpansionMode::PadToPowerOfTwo ? "pad" : "expand";
}

class TruncationConfig {
  public:
    TruncationConfig() : TruncationConfig(0) {}

    explicit TruncationConfig(std::size_t photons,
                              ExpansionMode mode = ExpansionMode::PadToPowerOfTwo)
        : photons_(photons), mode_(mode),
          qubits_per_mode_(std::max<std::size_t>(1, std::bit_width(photons))),
          dim_(std::size_t{1} << qubits_per_mode_) {}

    [[nodiscard]] std::size_t photons() const noexcept { return photons_; }
    [[nodiscard]] ExpansionMode mode() const noexcept { return mode_; }
    /// ceil(log2(n + 1)), at least 1.
    [[nodiscard]] std::size_t qubits_per_mode() const noexcept { return qubits_per_mode_; }
    /// Per-mode register dimension 2^w.
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    /// Highest occupation the ladder operators connect.
    [[nodiscard]] std::size_t level() const noexcept {
        return mode_ == ExpansionMode::PadToPowerOfTwo ? photons_ : dim_ - 1;
    }

    friend bool operator==(const TruncationConfig &, const TruncationConfig &) = default;

  private:
    std::size_t photons_;
    ExpansionMode mode_;
    std::size_t qubits_per_mode_;
    std::size_t dim_;
};

enum class LadderKind { Creation, Annihilation };

struct LadderOperator {
    std::size_t dim = 0;
    LadderKind kind = LadderKind::Creation;
    ComplexMatrix matrix;
};

struct FockState {
    std::vector<std::size_t> occupations;

    [[nodiscard]] std::size_t modes() const noexcept { return occupations.size(); }
    [[nodiscard]] std::size_t total() const noexcept {
        return std::accumulate(occupations.begin(), occupations.end(), std::size_t{0});
    }

    friend auto operator<=>(const FockState &, const FockState &) = default;
};

[[nodiscard]] inline std::string to_string(const FockState &s) {
    std::string out;
    for (std::size_t i = 0; i < s.occupations.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(s.occupations[i]);
    }
    return out;
}

struct TruncatedUnitary {
    std::size_t qubits = 0; ///< 2w
    ComplexMatrix matrix;   ///< 4^w x 4^w
    BeamsplitterElement source;
    TruncationConfig config;
};

[[nodiscard]] inline LadderOperator ladder(const TruncationConfig &config, LadderKind kind) {
    const auto d = static_cast<Eigen::Index>(config.dim());
    ComplexMatrix create = ComplexMatrix::Zero(d, d);
    for (std::size_t k = 0; k < config.level(); ++k) {
        const auto row = static_cast<Eigen::Index>(k + 1);
        create(row, row - 1) = std::sqrt(static_cast<double>(k + 1));
    }
    if (kind == LadderKind::Creation) {
        return {config.dim(), kind, create};
    }
    return {config.dim(), kind, create.adjoint()};
}

/// Second-quantized lift H = sum_ij h_ij a_i^dag a_j of a two-mode
/// single-particle Hamiltonian. Mode 0 acts on the less significant tensor
/// factor, matching encode_fock.
[[nodiscard]] inline ComplexMatrix lift_two_mode(const ComplexMatrix &h,
                                                 const TruncationConfig &config) {
    if (h.rows() != 2 || h.cols() != 2) {
        throw DimensionError("lift_two_mode: single-particle Hamiltonian must be 2x2");
    }
    require_hermitian(h, "lift_two_mode");
    const auto d = static_cast<Eigen::Index>(config.dim());
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    const ComplexMatrix up = ladder(config, LadderKind::Creation).matrix;
    const ComplexMatrix down = ladder(config, LadderKind::Annihilation).matrix;

    const ComplexMatrix create[2] = {kron(id, up), kron(up, id)};
    const ComplexMatrix annihilate[2] = {kron(id, down), kron(down, id)};

    ComplexMatrix out = ComplexMatrix::Zero(d * d, d * d);
    for (Eigen::Index i = 0; i < 2; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) {
            if (h(i, j) != Complex{0.0}) {
                out += h(i, j) * (create[i] * annihilate[j]);
            }
        }
    }
    return out;
}

/// exp(i H^(n)) for the lifted Hamiltonian of one beamsplitter, with
/// h = -i log T(theta, phi) on the principal branch.
[[nodiscard]] inline TruncatedUnitary truncated_beamsplitter_unitary(const BeamsplitterElement &b,
                                                                     const TruncationConfig &config) {
    const ComplexMatrix h = matrix_log_unitary(beamsplitter_matrix(b.theta, b.phi));
    const ComplexMatrix lifted = lift_two_mode(h, config);
    return {2 * config.qubits_per_mode(), matrix_exp_hermitian(lifted, kI), b, config};
}

/// Per-register phases e^{i alpha s}, s = 0 .. d-1, for a single-mode phase
/// shift alpha.
[[nodiscard]] inline std::vector<double> mode_phase_diagonal(double alpha,
                                                             const TruncationConfig &config) {
    std::vector<double> phases(config.dim());
    for (std::size_t s = 0; s < phases.size(); ++s) {
        phases[s] = alpha * static_cast<double>(s);
    }
    return phases;
}

namespace detail {
inline void enumerate_into(std::vector<FockState> &out, std::vector<std::size_t> &prefix,
                           std::size_t modes, std::size_t remaining) {
    if (prefix.size() + 1 == modes) {
        prefix.push_back(remaining);
        out.push_back({prefix});
        prefix.pop_back();
        return;
    }
    for (std::size_t s = 0; s <= remaining; ++s) {
        prefix.push_back(s);
        enumerate_into(out, prefix, modes, remaining - s);
        prefix.pop_back();
    }
}
} // namespace detail

/// All occupation vectors over `modes` modes with exactly `photons` photons,
/// in ascending lexicographic order. There are C(photons + modes - 1, photons).
[[nodiscard]] inline std::vector<FockState> enumerate_fock_states(std::size_t modes,
                                                                  std::size_t photons) {
    if (modes == 0) {
        throw DimensionError("enumerate_fock_states: need at least one mode");
    }
    std::vector<FockState> out;
    std::vector<std::size_t> prefix;
    prefix.reserve(modes);
    detail::enumerate_into(out, prefix, modes, photons);
    return out;
}

[[nodiscard]] inline std::size_t encode_fock(const FockState &s, const TruncationConfig &config) {
    const std::size_t w = config.qubits_per_mode();
    if (s.modes() * w >= 8 * sizeof(std::size_t)) {
        throw EncodingError("encode_fock: register too wide for a basis index");
    }
    std::size_t index = 0;
    for (std::size_t i = 0; i < s.modes(); ++i) {
        const std::size_t occ = s.occupations[i];
        if (occ >= config.dim()) {
            throw EncodingError("encode_fock: occupation " + std::to_string(occ) + " of mode " +
                                std::to_string(i) + " does not fit " + std::to_string(w) +
                                " qubits");
        }
        index |= occ << (i * w);
    }
    return index;
}

[[nodiscard]] inline FockState decode_fock(std::size_t index, std::size_t modes,
                                           const TruncationConfig &config) {
    const std::size_t w = config.qubits_per_mode();
    const std::size_t mask = config.dim() - 1;
    FockState s;
    s.occupations.resize(modes);
    for (std::size_t i = 0; i < modes; ++i) {
        s.occupations[i] = (index >> (i * w)) & mask;
    }
    return s;
}

} // namespace fockc
