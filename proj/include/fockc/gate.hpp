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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "linalg.hpp"

namespace fockc {

enum class GateKind { CX, U3 };

/// One gate of the {CNOT, U3} gate set.
///
/// U3(theta, phi, lambda) = [ cos(t/2)           -e^{i l} sin(t/2)     ]
///                          [ e^{i p} sin(t/2)    e^{i(p+l)} cos(t/2)  ]
struct Gate {
    GateKind kind = GateKind::U3;
    std::size_t control = 0; ///< CX only
    std::size_t target = 0;  ///< CX target, or the U3 qubit
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;

    [[nodiscard]] static Gate cx(std::size_t control, std::size_t target) {
        return {GateKind::CX, control, target, 0.0, 0.0, 0.0};
    }
    [[nodiscard]] static Gate u3(std::size_t qubit, double theta, double phi, double lambda) {
        return {GateKind::U3, 0, qubit, theta, phi, lambda};
    }
    [[nodiscard]] static Gate ry(std::size_t qubit, double angle) {
        return u3(qubit, angle, 0.0, 0.0);
    }
    /// diag(1, e^{i angle}), i.e. Rz(angle) up to a global phase.
    [[nodiscard]] static Gate phase(std::size_t qubit, double angle) {
        return u3(qubit, 0.0, 0.0, angle);
    }

    [[nodiscard]] bool is_cx() const noexcept { return kind == GateKind::CX; }
    [[nodiscard]] std::size_t max_qubit() const noexcept {
        return is_cx() ? std::max(control, target) : target;
    }

    friend bool operator==(const Gate &, const Gate &) = default;
};

using Matrix2 = Eigen::Matrix2cd;

[[nodiscard]] inline Matrix2 u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    Matrix2 m;
    m << c, -std::polar(s, lambda), std::polar(s, phi), std::polar(c, phi + lambda);
    return m;
}

struct U3Angles {
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;
    double global_phase = 0.0; ///< u = e^{i global_phase} U3(theta, phi, lambda)
};

/// ZYZ angles of an arbitrary 2x2 unitary.
[[nodiscard]] inline U3Angles u3_angles(const Matrix2 &u) {
    const Complex det = u.determinant();
    const Complex root = std::sqrt(det);
    const Matrix2 v = u / root; // SU(2): [[a, -b*], [b, a*]]
    const Complex a = v(0, 0);
    const Complex b = v(1, 0);
    U3Angles out;
    out.theta = 2.0 * std::atan2(std::abs(b), std::abs(a));
    const double sum = std::abs(a) > 0.0 ? -2.0 * std::arg(a) : 0.0;
    const double diff = std::abs(b) > 0.0 ? 2.0 * std::arg(b) : 0.0;
    out.phi = 0.5 * (sum + diff);
    out.lambda = 0.5 * (sum - diff);
    const Matrix2 fitted = u3_matrix(out.theta, out.phi, out.lambda);
    out.global_phase = std::arg((fitted.adjoint() * u).trace());
    return out;
}

/// Applies `g` in place. Qubit q addresses bit q of the amplitude index.
inline void apply_gate(std::span<Complex> amps, const Gate &g) {
    const std::size_t n = amps.size();
    if (g.is_cx()) {
        const std::size_t cmask = std::size_t{1} << g.control;
        const std::size_t tmask = std::size_t{1} << g.target;
        for (std::size_t i = 0; i < n; ++i) {
            if ((i & cmask) != 0 && (i & tmask) == 0) {
                std::swap(amps[i], amps[i | tmask]);
            }
        }
        return;
    }
    const Matrix2 m = u3_matrix(g.theta, g.phi, g.lambda);
    const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
    const std::size_t stride = std::size_t{1} << g.target;
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const Complex a0 = amps[i];
            const Complex a1 = amps[i + stride];
            amps[i] = m00 * a0 + m01 * a1;
            amps[i + stride] = m10 * a0 + m11 * a1;
        }
    }
}

/// Wavefront depth: a gate starts once all of its wires are free and holds
/// them for one step.
[[nodiscard]] inline std::size_t circuit_depth(std::span<const Gate> gates, std::size_t qubits) {
    std::vector<std::size_t> wire(qubits, 0);
    std::size_t depth = 0;
    for (const auto &g : gates) {
        std::size_t t = wire[g.target];
        if (g.is_cx()) {
            t = std::max(t, wire[g.control]);
            wire[g.control] = t + 1;
        }
        wire[g.target] = t + 1;
        depth = std::max(depth, t + 1);
    }
    return depth;
}

[[nodiscard]] inline std::size_t cnot_count(std::span<const Gate> gates) {
    return static_cast<std::size_t>(
        std::count_if(gates.begin(), gates.end(), [](const Gate &g) { return g.is_cx(); }));
}

/// Dense unitary of a gate list on `qubits` qubits (gates applied in order).
[[nodiscard]] inline ComplexMatrix gates_unitary(std::span<const Gate> gates, std::size_t qubits) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << qubits);
    ComplexMatrix out = ComplexMatrix::Identity(dim, dim);
    for (const auto &g : gates) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            apply_gate(std::span<Complex>(out.col(j).data(), static_cast<std::size_t>(dim)), g);
        }
    }
    return out;
}

} // namespace fockc
