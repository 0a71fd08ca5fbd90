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
 * Exact synthesis of k-qubit unitaries into {CNOT, U3}.
 *
 * General unitaries go through the quantum Shannon decomposition: a
 * cosine-sine split on the most significant qubit gives a multiplexed Ry
 * between two block-diagonal factors, and each block-diagonal factor is
 * demultiplexed into two (k-1)-qubit unitaries around a multiplexed Rz.
 * Two-qubit blocks use the KAK (magic basis) decomposition with three CNOTs,
 * single-qubit blocks a single U3. Diagonal unitaries have a cheaper
 * dedicated route made only of multiplexed Rz.
 *
 * Qubit q is bit q of the matrix index; all results are exact up to a
 * global phase, which is reported but not emitted.
 */

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "gate.hpp"
#include "linalg.hpp"

namespace fockc {

struct SynthesisResult {
    std::vector<Gate> gates;
    std::size_t qubits = 0;
    double reconstruction_error = 0.0; ///< max entry error up to global phase
    double global_phase = 0.0;         ///< target = e^{i global_phase} * circuit
    std::size_t cnot_count = 0;
    std::size_t depth = 0;
};

namespace detail {

enum class RotationAxis { Y, Z };

inline constexpr double kAngleEpsilon = 1e-15;
inline constexpr double kIdentityEpsilon = 1e-14;

inline Gate rotation(RotationAxis axis, std::size_t qubit, double angle) {
    return axis == RotationAxis::Y ? Gate::ry(qubit, angle) : Gate::phase(qubit, angle);
}

/// Uniformly controlled rotation on `target`, controlled by qubits
/// 0 .. controls-1; angles[j] is applied when the controls read j.
/// Gray-code ordering needs 2^controls CNOTs.
inline void emit_multiplexed_rotation(std::vector<Gate> &out, RotationAxis axis,
                                      std::size_t target, std::size_t controls,
                                      std::span<const double> angles) {
    const std::size_t count = std::size_t{1} << controls;
    bool all_zero = true;
    bool all_equal = true;
    for (std::size_t j = 0; j < count; ++j) {
        all_zero = all_zero && std::abs(angles[j]) <= kAngleEpsilon;
        all_equal = all_equal && std::abs(angles[j] - angles[0]) <= kAngleEpsilon;
    }
    if (all_zero) {
        return;
    }
    if (all_equal) {
        out.push_back(rotation(axis, target, angles[0]));
        return;
    }

    // angles[j] = sum_i (-1)^{popcount(j & gray(i))} theta[i]
    std::vector<double> theta(count, 0.0);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t gray = i ^ (i >> 1);
        double acc = 0.0;
        for (std::size_t j = 0; j < count; ++j) {
            acc += (std::popcount(j & gray) % 2 == 0) ? angles[j] : -angles[j];
        }
        theta[i] = acc / static_cast<double>(count);
    }
    for (std::size_t i = 0; i < count; ++i) {
        if (std::abs(theta[i]) > kAngleEpsilon) {
            out.push_back(rotation(axis, target, theta[i]));
        }
        const std::size_t bit =
            (i + 1 == count) ? controls - 1 : static_cast<std::size_t>(std::countr_zero(i + 1));
        out.push_back(Gate::cx(bit, target));
    }
}

inline void emit_single_qubit(std::vector<Gate> &out, const Matrix2 &u, std::size_t qubit) {
    const auto a = u3_angles(u);
    out.push_back(Gate::u3(qubit, a.theta, a.phi, a.lambda));
}

struct CosineSine {
    ComplexMatrix l0, l1, r0, r1;
    std::vector<double> theta;
};

/// u = (l0 (+) l1) [[C, -S], [S, C]] (r0 (+) r1), equal halves.
inline CosineSine cosine_sine(const ComplexMatrix &u) {
    const auto n = u.rows();
    const auto h = n / 2;
    ComplexMatrix x = u;
    CosineSine cs{ComplexMatrix(h, h), ComplexMatrix(h, h), ComplexMatrix(h, h),
                  ComplexMatrix(h, h), std::vector<double>(static_cast<std::size_t>(h))};
    Complex *base = x.data();
    const auto ld = static_cast<lapack_int>(n);
    const auto lh = static_cast<lapack_int>(h);
    const lapack_int info = LAPACKE_zuncsd(
        LAPACK_COL_MAJOR, 'Y', 'Y', 'Y', 'Y', 'N', 'D', ld, lh, lh, base, ld, base + h * n, ld,
        base + h, ld, base + h + h * n, ld, cs.theta.data(), cs.l0.data(), lh, cs.l1.data(), lh,
        cs.r0.data(), lh, cs.r1.data(), lh);
    if (info != 0) {
        throw ValidationError("cosine_sine: zuncsd failed with info " + std::to_string(info));
    }
    return cs;
}

struct Demultiplexed {
    ComplexMatrix v, w;
    std::vector<double> rz_angles;
};

/// u0 (+) u1 = (I (x) v) (D (+) D^dag) (I (x) w) with D = diag(e^{-i a_j / 2}).
inline Demultiplexed demultiplex(const ComplexMatrix &u0, const ComplexMatrix &u1) {
    const ComplexMatrix prod = u0 * u1.adjoint();
    Eigen::ComplexSchur<ComplexMatrix> schur(prod);
    const ComplexMatrix &v = schur.matrixU();
    const auto h = prod.rows();
    Eigen::VectorXcd d(h);
    std::vector<double> angles(static_cast<std::size_t>(h));
    for (Eigen::Index j = 0; j < h; ++j) {
        const Complex lambda = schur.matrixT()(j, j);
        const Complex root = std::sqrt(lambda / std::abs(lambda));
        d(j) = root;
        angles[static_cast<std::size_t>(j)] = -2.0 * std::arg(root);
    }
    ComplexMatrix w = d.asDiagonal() * (v.adjoint() * u1);
    return {v, w, std::move(angles)};
}

/// Magic (Bell-like) basis that maps SU(2) x SU(2) onto SO(4).
inline const Eigen::Matrix4cd &magic_basis() {
    static const Eigen::Matrix4cd b = [] {
        const double r = 1.0 / std::numbers::sqrt2;
        Eigen::Matrix4cd m;
        m << r, 0, 0, kI * r, 0, kI * r, r, 0, 0, kI * r, -r, 0, r, 0, 0, -kI * r;
        return m;
    }();
    return b;
}

/// Splits K = A (x) C, where A acts on the more significant qubit.
inline std::pair<Matrix2, Matrix2> kron_factor(const Eigen::Matrix4cd &k) {
    Eigen::Index bi = 0, bj = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < 2; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) {
            const double nrm = k.block(2 * i, 2 * j, 2, 2).norm();
            if (nrm > best) {
                best = nrm;
                bi = i;
                bj = j;
            }
        }
    }
    const Matrix2 block = k.block(2 * bi, 2 * bj, 2, 2);
    const double scale = std::sqrt(std::abs(block.determinant()));
    const Matrix2 c = block / scale;
    Matrix2 a;
    for (Eigen::Index i = 0; i < 2; ++i) {
        for (Eigen::Index j = 0; j < 2; ++j) {
            a(i, j) = (c.adjoint() * k.block(2 * i, 2 * j, 2, 2)).trace() / 2.0;
        }
    }
    return {a, c};
}

struct KakParts {
    Matrix2 before_hi, before_lo; ///< applied first
    Matrix2 after_hi, after_lo;   ///< applied last
    double a = 0.0, b = 0.0, c = 0.0;
};

/// exp(i (a XX + b YY + c ZZ)) up to a global phase, on qubits (lo, lo + 1).
inline void emit_canonical(std::vector<Gate> &out, std::size_t lo, double a, double b, double c) {
    const double half_pi = std::numbers::pi / 2.0;
    const std::size_t hi = lo + 1;
    out.push_back(Gate::phase(hi, half_pi));
    out.push_back(Gate::cx(hi, lo));
    out.push_back(Gate::phase(lo, half_pi - 2.0 * c));
    out.push_back(Gate::ry(hi, half_pi - 2.0 * a));
    out.push_back(Gate::cx(lo, hi));
    out.push_back(Gate::ry(hi, 2.0 * b - half_pi));
    out.push_back(Gate::cx(hi, lo));
    out.push_back(Gate::phase(lo, -half_pi));
}

inline std::optional<KakParts> kak_attempt(const Eigen::Matrix4cd &u, double mix) {
    const Eigen::Matrix4cd &bm = magic_basis();
    const Eigen::Matrix4cd up = bm.adjoint() * u * bm;
    const Eigen::Matrix4cd m2 = up.transpose() * up;

    const Eigen::Matrix4d sym = m2.real() + mix * m2.imag();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(sym);
    Eigen::Matrix4d p = eig.eigenvectors();
    if (p.determinant() < 0.0) {
        p.col(0) = -p.col(0);
    }
    const Eigen::Matrix4cd pc = p.cast<Complex>();
    const Eigen::Matrix4cd diag = pc.transpose() * m2 * pc;
    Eigen::Vector4cd d;
    Complex prod{1.0};
    for (Eigen::Index i = 0; i < 4; ++i) {
        d(i) = std::sqrt(diag(i, i));
        prod *= d(i);
    }
    if (prod.real() < 0.0) {
        d(0) = -d(0);
    }
    const Eigen::Matrix4cd o1 = up * pc * d.cwiseInverse().asDiagonal();
    const Eigen::Matrix4cd k1 = bm * o1.real().cast<Complex>() * bm.adjoint();
    const Eigen::Matrix4cd k2 = bm * pc.transpose() * bm.adjoint();

    // Coefficients from the eigenphases: phase_i = a x_i + b y_i + c z_i + g.
    Matrix2 px, py, pz;
    px << 0, 1, 1, 0;
    py << 0, -kI, kI, 0;
    pz << 1, 0, 0, -1;
    Eigen::Matrix4d sys;
    const Matrix2 paulis[3] = {px, py, pz};
    for (int col = 0; col < 3; ++col) {
        Eigen::Matrix4cd pp;
        pp << paulis[col](0, 0) * paulis[col], paulis[col](0, 1) * paulis[col],
            paulis[col](1, 0) * paulis[col], paulis[col](1, 1) * paulis[col];
        const Eigen::Matrix4cd in_magic = bm.adjoint() * pp * bm;
        for (int row = 0; row < 4; ++row) {
            sys(row, col) = in_magic(row, row).real();
        }
    }
    sys.col(3).setOnes();
    Eigen::Vector4d phases;
    for (int i = 0; i < 4; ++i) {
        phases(i) = std::arg(d(i));
    }
    const Eigen::Vector4d coef = sys.fullPivLu().solve(phases);

    const auto [a1, a0] = kron_factor(k1);
    const auto [c1, c0] = kron_factor(k2);
    KakParts parts{c1, c0, a1, a0, coef(0), coef(1), coef(2)};

    std::vector<Gate> probe;
    emit_single_qubit(probe, parts.before_lo, 0);
    emit_single_qubit(probe, parts.before_hi, 1);
    emit_canonical(probe, 0, parts.a, parts.b, parts.c);
    emit_single_qubit(probe, parts.after_lo, 0);
    emit_single_qubit(probe, parts.after_hi, 1);
    if (max_abs_diff_up_to_phase(u, gates_unitary(probe, 2)) > 1e-11) {
        return std::nullopt;
    }
    return parts;
}

inline void emit_two_qubit(std::vector<Gate> &out, const ComplexMatrix &u) {
    Eigen::Matrix4cd v = u;
    v /= std::pow(v.determinant(), 0.25);
    std::optional<KakParts> parts;
    for (const double mix : {1.0, 0.6180339887498949, 2.718281828459045, 0.1, 7.389056098930650}) {
        parts = kak_attempt(v, mix);
        if (parts) {
            break;
        }
    }
    if (!parts) {
        throw ValidationError("emit_two_qubit: KAK decomposition did not converge");
    }
    emit_single_qubit(out, parts->before_lo, 0);
    emit_single_qubit(out, parts->before_hi, 1);
    // A product of single-qubit gates has a vanishing interaction part.
    if (std::max({std::abs(parts->a), std::abs(parts->b), std::abs(parts->c)}) > kIdentityEpsilon) {
        emit_canonical(out, 0, parts->a, parts->b, parts->c);
    }
    emit_single_qubit(out, parts->after_lo, 0);
    emit_single_qubit(out, parts->after_hi, 1);
}

inline void emit_unitary(std::vector<Gate> &out, const ComplexMatrix &u, std::size_t qubits);

/// u0 (+) u1 multiplexed on qubit `qubits - 1`.
inline void emit_block_diagonal(std::vector<Gate> &out, const ComplexMatrix &u0,
                                const ComplexMatrix &u1, std::size_t qubits) {
    const auto parts = demultiplex(u0, u1);
    emit_unitary(out, parts.w, qubits - 1);
    emit_multiplexed_rotation(out, RotationAxis::Z, qubits - 1, qubits - 1, parts.rz_angles);
    emit_unitary(out, parts.v, qubits - 1);
}

inline void emit_diagonal(std::vector<Gate> &out, std::span<const double> phases,
                          std::size_t qubits);

inline bool is_diagonal(const ComplexMatrix &u) {
    const ComplexMatrix off = u - ComplexMatrix(u.diagonal().asDiagonal());
    return max_abs(off) <= kIdentityEpsilon;
}

inline void emit_unitary(std::vector<Gate> &out, const ComplexMatrix &u, std::size_t qubits) {
    if (qubits == 1) {
        emit_single_qubit(out, u, 0);
        return;
    }
    // Diagonal blocks (identity included) need only multiplexed Rz.
    if (is_diagonal(u)) {
        std::vector<double> phases(static_cast<std::size_t>(u.rows()));
        for (std::size_t j = 0; j < phases.size(); ++j) {
            const auto jj = static_cast<Eigen::Index>(j);
            phases[j] = std::arg(u(jj, jj));
        }
        emit_diagonal(out, phases, qubits);
        return;
    }
    if (qubits == 2) {
        emit_two_qubit(out, u);
        return;
    }
    const auto cs = cosine_sine(u);
    std::vector<double> ry(cs.theta.size());
    for (std::size_t j = 0; j < ry.size(); ++j) {
        ry[j] = 2.0 * cs.theta[j];
    }
    emit_block_diagonal(out, cs.r0, cs.r1, qubits);
    emit_multiplexed_rotation(out, RotationAxis::Y, qubits - 1, qubits - 1, ry);
    emit_block_diagonal(out, cs.l0, cs.l1, qubits);
}

inline bool is_identity_up_to_phase(const Matrix2 &m) {
    return std::abs(m(0, 1)) <= kIdentityEpsilon && std::abs(m(1, 0)) <= kIdentityEpsilon &&
           std::abs(m(1, 1) / m(0, 0) - Complex{1.0}) <= kIdentityEpsilon;
}

inline void emit_diagonal(std::vector<Gate> &out, std::span<const double> phases,
                          std::size_t qubits) {
    if (qubits == 0) {
        return;
    }
    const std::size_t half = phases.size() / 2;
    std::vector<double> rest(half);
    std::vector<double> rz(half);
    for (std::size_t j = 0; j < half; ++j) {
        rest[j] = 0.5 * (phases[j] + phases[j + half]);
        rz[j] = phases[j + half] - phases[j];
    }
    emit_diagonal(out, rest, qubits - 1);
    emit_multiplexed_rotation(out, RotationAxis::Z, qubits - 1, qubits - 1, rz);
}

inline SynthesisResult finish(std::vector<Gate> gates, std::size_t qubits,
                              const ComplexMatrix &target);

} // namespace detail

/// Fuses runs of single-qubit gates on the same wire into one U3 and drops
/// the ones that reduce to the identity. CNOTs are left untouched.
[[nodiscard]] inline std::vector<Gate> merge_single_qubit_gates(std::span<const Gate> gates,
                                                                std::size_t qubits) {
    std::vector<std::optional<Matrix2>> pending(qubits);
    std::vector<Gate> out;
    out.reserve(gates.size());
    auto flush = [&](std::size_t q) {
        if (pending[q] && !detail::is_identity_up_to_phase(*pending[q])) {
            detail::emit_single_qubit(out, *pending[q], q);
        }
        pending[q].reset();
    };
    for (const auto &g : gates) {
        if (g.is_cx()) {
            flush(g.control);
            flush(g.target);
            out.push_back(g);
            continue;
        }
        const Matrix2 m = u3_matrix(g.theta, g.phi, g.lambda);
        pending[g.target] = pending[g.target] ? Matrix2(m * *pending[g.target]) : m;
    }
    for (std::size_t q = 0; q < qubits; ++q) {
        flush(q);
    }
    return out;
}

namespace detail {
inline SynthesisResult finish(std::vector<Gate> gates, std::size_t qubits,
                              const ComplexMatrix &target) {
    SynthesisResult r;
    r.qubits = qubits;
    r.gates = merge_single_qubit_gates(gates, qubits);
    const ComplexMatrix built = gates_unitary(r.gates, qubits);
    r.reconstruction_error = max_abs_diff_up_to_phase(target, built);
    const Complex overlap = (built.adjoint() * target).trace();
    r.global_phase = std::abs(overlap) > 0.0 ? std::arg(overlap) : 0.0;
    r.cnot_count = cnot_count(r.gates);
    r.depth = circuit_depth(r.gates, qubits);
    return r;
}
} // namespace detail

[[nodiscard]] inline SynthesisResult synthesize(const ComplexMatrix &u) {
    require_square(u, "synthesize");
    const auto dim = static_cast<std::size_t>(u.rows());
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw DimensionError("synthesize: dimension " + std::to_string(dim) +
                             " is not a power of two >= 2");
    }
    require_unitary(u, "synthesize");
    const auto qubits = static_cast<std::size_t>(std::countr_zero(dim));
    std::vector<Gate> raw;
    detail::emit_unitary(raw, u, qubits);
    return detail::finish(std::move(raw), qubits, u);
}

/// diag(e^{i phases[j]}) from multiplexed z rotations only.
[[nodiscard]] inline SynthesisResult synthesize_diagonal(std::span<const double> phases) {
    const std::size_t dim = phases.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw DimensionError("synthesize_diagonal: length " + std::to_string(dim) +
                             " is not a power of two >= 2");
    }
    const auto qubits = static_cast<std::size_t>(std::countr_zero(dim));
    std::vector<Gate> raw;
    detail::emit_diagonal(raw, phases, qubits);
    Eigen::VectorXcd diag(static_cast<Eigen::Index>(dim));
    for (std::size_t j = 0; j < dim; ++j) {
        diag(static_cast<Eigen::Index>(j)) = std::polar(1.0, phases[j]);
    }
    return detail::finish(std::move(raw), qubits, ComplexMatrix(diag.asDiagonal()));
}

} // namespace fockc
