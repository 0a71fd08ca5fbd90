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
 * Rectangular (Clements) decomposition of an m-mode interferometer into
 * adjacent-mode beamsplitters and a residual diagonal of output phases.
 *
 * Beamsplitter convention on modes (k, k+1):
 *
 *     T(theta, phi) = [ e^{i phi} cos theta   -sin theta ]
 *                     [ e^{i phi} sin theta    cos theta ]
 *
 * The decomposition satisfies U = D * T_L ... T_1, where elements are
 * stored in application order (T_1 first) and D = diag(e^{i alpha_k}).
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "linalg.hpp"

namespace fockc {

struct BeamsplitterElement {
    std::size_t mode_lo = 0; ///< couples modes mode_lo and mode_lo + 1
    double theta = 0.0;      ///< [0, pi/2]
    double phi = 0.0;        ///< [0, 2 pi)
    std::size_t position = 0;
};

struct ClementsDecomposition {
    std::size_t modes = 0;
    std::vector<BeamsplitterElement> elements;
    std::vector<double> output_phases;
};

[[nodiscard]] inline ComplexMatrix beamsplitter_matrix(double theta, double phi) {
    const Complex e = std::polar(1.0, phi);
    ComplexMatrix t(2, 2);
    t << e * std::cos(theta), -std::sin(theta), e * std::sin(theta), std::cos(theta);
    return t;
}

namespace detail {

inline double wrap_phase(double phi) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(phi, two_pi);
    if (w < 0.0) {
        w += two_pi;
    }
    if (w >= two_pi - 1e-12) {
        w = 0.0;
    }
    return w;
}

inline double phase_of(Complex z) { return z == Complex{0.0} ? 0.0 : std::arg(z); }

// M <- M * T^{-1} acting on columns (k, k+1).
inline void apply_inverse_right(ComplexMatrix &m, Eigen::Index k, double theta, double phi) {
    const Complex em = std::polar(1.0, -phi);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        const Complex a = m(r, k);
        const Complex b = m(r, k + 1);
        m(r, k) = a * em * c - b * s;
        m(r, k + 1) = a * em * s + b * c;
    }
}

// M <- T * M acting on rows (k, k+1).
inline void apply_left(ComplexMatrix &m, Eigen::Index k, double theta, double phi) {
    const Complex e = std::polar(1.0, phi);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    for (Eigen::Index col = 0; col < m.cols(); ++col) {
        const Complex a = m(k, col);
        const Complex b = m(k + 1, col);
        m(k, col) = e * c * a - s * b;
        m(k + 1, col) = e * s * a + c * b;
    }
}

} // namespace detail

/// Embeds T(theta, phi) on modes (mode_lo, mode_lo + 1) of an m-mode identity.
[[nodiscard]] inline ComplexMatrix embed_beamsplitter(const BeamsplitterElement &e,
                                                      std::size_t modes) {
    const auto m = static_cast<Eigen::Index>(modes);
    ComplexMatrix out = ComplexMatrix::Identity(m, m);
    out.block(static_cast<Eigen::Index>(e.mode_lo), static_cast<Eigen::Index>(e.mode_lo), 2, 2) =
        beamsplitter_matrix(e.theta, e.phi);
    return out;
}

[[nodiscard]] inline ComplexMatrix reconstruct(const ClementsDecomposition &d) {
    const auto m = static_cast<Eigen::Index>(d.modes);
    if (d.output_phases.size() != d.modes) {
        throw DimensionError("reconstruct: output_phases size differs from mode count");
    }
    ComplexMatrix out = ComplexMatrix::Identity(m, m);
    for (const auto &e : d.elements) {
        if (e.mode_lo + 1 >= d.modes) {
            throw DimensionError("reconstruct: element acts outside the mode range");
        }
        const auto k = static_cast<Eigen::Index>(e.mode_lo);
        const ComplexMatrix t = beamsplitter_matrix(e.theta, e.phi);
        out.middleRows(k, 2) = (t * out.middleRows(k, 2)).eval();
    }
    for (Eigen::Index k = 0; k < m; ++k) {
        out.row(k) *= std::polar(1.0, d.output_phases[static_cast<std::size_t>(k)]);
    }
    return out;
}

/// Nulls the below-anti-diagonal entries alternately from the right (with
/// T^{-1} on columns) and from the left (with T on rows), then pushes the
/// left factors through the remaining diagonal so that every element ends up
/// on the right of D.
[[nodiscard]] inline ClementsDecomposition decompose(const ComplexMatrix &u) {
    require_square(u, "decompose");
    if (u.rows() == 0) {
        throw DimensionError("decompose: need at least one mode");
    }
    require_unitary(u, "decompose");

    const auto m = u.rows();
    ComplexMatrix work = u;
    std::vector<BeamsplitterElement> right;
    std::vector<BeamsplitterElement> left;

    for (Eigen::Index i = 0; i + 1 < m; ++i) {
        if (i % 2 == 0) {
            for (Eigen::Index j = 0; j <= i; ++j) {
                const Eigen::Index row = m - 1 - j;
                const Eigen::Index col = i - j;
                const Complex x = work(row, col);
                const Complex y = work(row, col + 1);
                const double theta = std::atan2(std::abs(x), std::abs(y));
                const double phi =
                    x == Complex{0.0} ? 0.0 : detail::phase_of(x) - detail::phase_of(y);
                detail::apply_inverse_right(work, col, theta, phi);
                right.push_back({static_cast<std::size_t>(col), theta, detail::wrap_phase(phi), 0});
            }
        } else {
            for (Eigen::Index j = 1; j <= i + 1; ++j) {
                const Eigen::Index row = m + j - i - 2;
                const Eigen::Index col = j - 1;
                const Complex top = work(row - 1, col);
                const Complex bottom = work(row, col);
                const double theta = std::atan2(std::abs(bottom), std::abs(top));
                const double phi =
                    bottom == Complex{0.0} ? 0.0 : detail::phase_of(-bottom) - detail::phase_of(top);
                detail::apply_left(work, row - 1, theta, phi);
                left.push_back(
                    {static_cast<std::size_t>(row - 1), theta, detail::wrap_phase(phi), 0});
            }
        }
    }

    std::vector<Complex> diag(static_cast<std::size_t>(m));
    for (Eigen::Index k = 0; k < m; ++k) {
        const Complex z = work(k, k);
        diag[static_cast<std::size_t>(k)] = z / std::abs(z);
    }

    // T^{-1}(theta, phi) diag(a, b) = diag(a', b') T(theta', phi')
    std::vector<BeamsplitterElement> pushed;
    pushed.reserve(left.size());
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
        const std::size_t k = it->mode_lo;
        const Complex a = diag[k];
        const Complex b = diag[k + 1];
        const Complex em = std::polar(1.0, -it->phi);
        if (it->theta == 0.0) {
            diag[k] = em * a;
            pushed.push_back({k, 0.0, 0.0, 0});
        } else {
            diag[k] = -em * b;
            pushed.push_back({k, it->theta, detail::wrap_phase(std::arg(-a * std::conj(b))), 0});
        }
    }

    ClementsDecomposition out;
    out.modes = static_cast<std::size_t>(m);
    out.elements.reserve(right.size() + pushed.size());
    for (const auto &e : right) {
        out.elements.push_back(e);
    }
    for (const auto &e : pushed) {
        out.elements.push_back(e);
    }
    for (std::size_t p = 0; p < out.elements.size(); ++p) {
        out.elements[p].position = p;
    }
    out.output_phases.reserve(diag.size());
    for (const Complex z : diag) {
        out.output_phases.push_back(detail::wrap_phase(std::arg(z)));
    }
    return out;
}

} // namespace fockc
