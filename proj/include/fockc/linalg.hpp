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
 * Dense complex matrices and the spectral transforms used by the compiler:
 * the principal logarithm of a unitary, the exponential of a Hermitian
 * matrix, and Haar-random unitary sampling.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "error.hpp"

namespace fockc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Default tolerances shared by the pipeline.
namespace tolerance {
inline constexpr double unitarity = 1e-10;
inline constexpr double hermiticity = 1e-10;
inline constexpr double round_trip = 1e-9;
} // namespace tolerance

struct UnitarityReport {
    double max_deviation = 0.0;
    bool passed = false;
};

[[nodiscard]] inline bool all_finite(const ComplexMatrix &m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                return false;
            }
        }
    }
    return true;
}

[[nodiscard]] inline double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

[[nodiscard]] inline double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: shape mismatch");
    }
    return max_abs(a - b);
}

/// Max entry deviation between `a` and `b` after removing the best-fit
/// global phase, i.e. min over gamma of max|a - e^{i gamma} b| evaluated at
/// the phase of <b, a>.
[[nodiscard]] inline double max_abs_diff_up_to_phase(const ComplexMatrix &a,
                                                     const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff_up_to_phase: shape mismatch");
    }
    const Complex overlap = (b.adjoint() * a).trace();
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex{1.0};
    return max_abs(a - phase * b);
}

inline void require_square(const ComplexMatrix &m, const char *who) {
    if (m.rows() != m.cols()) {
        throw DimensionError(std::string(who) + ": matrix is " + std::to_string(m.rows()) + "x" +
                             std::to_string(m.cols()) + ", expected square");
    }
}

[[nodiscard]] inline UnitarityReport check_unitary(const ComplexMatrix &m, double tol) {
    require_square(m, "check_unitary");
    if (!all_finite(m)) {
        return {std::numeric_limits<double>::infinity(), false};
    }
    const auto n = m.rows();
    const double dev = max_abs(m.adjoint() * m - ComplexMatrix::Identity(n, n));
    return {dev, dev <= tol};
}

[[nodiscard]] inline double hermiticity_deviation(const ComplexMatrix &m) {
    require_square(m, "hermiticity_deviation");
    if (!all_finite(m)) {
        return std::numeric_limits<double>::infinity();
    }
    return max_abs(m - m.adjoint());
}

inline void require_unitary(const ComplexMatrix &m, const char *who,
                            double tol = tolerance::unitarity) {
    const auto report = check_unitary(m, tol);
    if (!report.passed) {
        throw ValidationError(std::string(who) + ": matrix is not unitary (max |U^dag U - I| = " +
                                  std::to_string(report.max_deviation) + ")",
                              report.max_deviation);
    }
}

inline void require_hermitian(const ComplexMatrix &m, const char *who,
                              double tol = tolerance::hermiticity) {
    const double dev = hermiticity_deviation(m);
    if (!(dev <= tol)) {
        throw ValidationError(std::string(who) + ": matrix is not Hermitian (max |H - H^dag| = " +
                                  std::to_string(dev) + ")",
                              dev);
    }
}

/// H = -i log U on the principal branch: eigenphases in (-pi, pi].
///
/// U is normal, so its complex Schur form is diagonal up to rounding and the
/// Schur vectors form an orthonormal eigenbasis even when eigenvalues are
/// degenerate. The result is Hermitized before returning.
[[nodiscard]] inline ComplexMatrix matrix_log_unitary(const ComplexMatrix &u) {
    require_unitary(u, "matrix_log_unitary");
    const auto n = u.rows();
    if (n == 0) {
        return {};
    }
    Eigen::ComplexSchur<ComplexMatrix> schur(u);
    const ComplexMatrix &q = schur.matrixU();
    const ComplexMatrix &t = schur.matrixT();
    Eigen::VectorXcd phases(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        double angle = std::arg(t(k, k));
        if (angle <= -std::numbers::pi) {
            angle = std::numbers::pi;
        }
        phases(k) = angle;
    }
    ComplexMatrix h = q * phases.asDiagonal() * q.adjoint();
    return (h + h.adjoint()) * 0.5;
}

/// exp(scale * H) for Hermitian H via its real spectral decomposition.
[[nodiscard]] inline ComplexMatrix matrix_exp_hermitian(const ComplexMatrix &h, Complex scale) {
    require_hermitian(h, "matrix_exp_hermitian");
    const auto n = h.rows();
    if (n == 0) {
        return {};
    }
    const ComplexMatrix sym = (h + h.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(sym);
    if (eig.info() != Eigen::Success) {
        throw ValidationError("matrix_exp_hermitian: eigensolver did not converge");
    }
    Eigen::VectorXcd factors(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        factors(k) = std::exp(scale * eig.eigenvalues()(k));
    }
    const ComplexMatrix &v = eig.eigenvectors();
    return v * factors.asDiagonal() * v.adjoint();
}

/// Haar-distributed m x m unitary: QR of a complex Ginibre matrix with the
/// phases of R's diagonal moved into Q. Reproducible for fixed (m, seed).
[[nodiscard]] inline ComplexMatrix haar_random_unitary(std::size_t m, std::uint64_t seed) {
    if (m == 0) {
        throw DimensionError("haar_random_unitary: m must be at least 1");
    }
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    const auto dim = static_cast<Eigen::Index>(m);
    ComplexMatrix z(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            const double re = normal(gen);
            const double im = normal(gen);
            z(i, j) = Complex(re, im) / std::numbers::sqrt2;
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < dim; ++k) {
        const Complex d = r(k, k);
        const double mag = std::abs(d);
        q.col(k) *= mag > 0.0 ? d / mag : Complex{1.0};
    }
    return q;
}

/// Nearest unitary in Frobenius norm (unitary polar factor).
[[nodiscard]] inline ComplexMatrix polar_project(const ComplexMatrix &m) {
    require_square(m, "polar_project");
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

/// Kronecker product with `a` as the more significant factor.
[[nodiscard]] inline ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

} // namespace fockc
