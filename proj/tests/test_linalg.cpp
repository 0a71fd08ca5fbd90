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

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace fockc {
namespace {

TEST(CheckUnitary, IdentityHasZeroDeviation) {
    const auto r = check_unitary(ComplexMatrix::Identity(3, 3), 1e-10);
    EXPECT_EQ(r.max_deviation, 0.0);
    EXPECT_TRUE(r.passed);
}

TEST(CheckUnitary, ScaledDiagonalFails) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(0, 0) = 1.0;
    m(1, 1) = 2.0;
    const auto r = check_unitary(m, 1e-10);
    EXPECT_DOUBLE_EQ(r.max_deviation, 3.0);
    EXPECT_FALSE(r.passed);
}

TEST(CheckUnitary, HaarPasses) {
    EXPECT_TRUE(check_unitary(haar_random_unitary(4, 7), 1e-10).passed);
}

TEST(CheckUnitary, NonSquareThrows) {
    EXPECT_THROW((void)check_unitary(ComplexMatrix::Zero(2, 3), 1e-10), DimensionError);
}

TEST(CheckUnitary, PassedMatchesTolerance) {
    ComplexMatrix m = ComplexMatrix::Identity(2, 2);
    m(0, 0) = 1.0 + 1e-6;
    const auto r = check_unitary(m, 1e-10);
    EXPECT_FALSE(r.passed);
    EXPECT_TRUE(check_unitary(m, r.max_deviation).passed);
}

TEST(MatrixLog, IdentityGivesZero) {
    EXPECT_EQ(max_abs(matrix_log_unitary(ComplexMatrix::Identity(4, 4))), 0.0);
}

TEST(MatrixLog, DiagonalPhases) {
    ComplexMatrix u = ComplexMatrix::Zero(2, 2);
    u(0, 0) = std::polar(1.0, std::numbers::pi / 2);
    u(1, 1) = std::polar(1.0, -std::numbers::pi / 2);
    ComplexMatrix expected = ComplexMatrix::Zero(2, 2);
    expected(0, 0) = std::numbers::pi / 2;
    expected(1, 1) = -std::numbers::pi / 2;
    EXPECT_LT(max_abs_diff(matrix_log_unitary(u), expected), 1e-14);
}

TEST(MatrixLog, RealBeamsplitter) {
    const ComplexMatrix u = testing::simple_beamsplitter(0.3, 0.0);
    ComplexMatrix expected(2, 2);
    expected << 0.0, Complex(0, -0.3), Complex(0, 0.3), 0.0;
    EXPECT_LT(max_abs_diff(matrix_log_unitary(u), expected), 1e-14);
}

TEST(MatrixLog, RejectsNonUnitary) {
    EXPECT_THROW((void)matrix_log_unitary(ComplexMatrix::Identity(2, 2) * 2.0), ValidationError);
}

TEST(MatrixLog, BranchCutMapsToPi) {
    ComplexMatrix u = -ComplexMatrix::Identity(2, 2);
    const ComplexMatrix h = matrix_log_unitary(u);
    EXPECT_LT(max_abs_diff(h, ComplexMatrix::Identity(2, 2) * std::numbers::pi), 1e-14);
}

TEST(MatrixLog, PropertyRoundTripAndSpectrum) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t m = 1 + seed % 7;
        const ComplexMatrix u = haar_random_unitary(m, seed);
        const ComplexMatrix h = matrix_log_unitary(u);
        EXPECT_EQ(hermiticity_deviation(h), 0.0);
        EXPECT_LE(max_abs_diff(matrix_exp_hermitian(h, kI), u), tolerance::round_trip);
        const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(h).eigenvalues();
        EXPECT_GT(ev.minCoeff(), -std::numbers::pi - 1e-12);
        EXPECT_LE(ev.maxCoeff(), std::numbers::pi + 1e-12);
    }
}

TEST(MatrixExp, ZeroGivesIdentity) {
    EXPECT_EQ(max_abs_diff(matrix_exp_hermitian(ComplexMatrix::Zero(3, 3), kI),
                           ComplexMatrix::Identity(3, 3)),
              0.0);
}

TEST(MatrixExp, RealBeamsplitterRoundTrip) {
    ComplexMatrix h(2, 2);
    h << 0.0, Complex(0, -0.3), Complex(0, 0.3), 0.0;
    EXPECT_LT(max_abs_diff(matrix_exp_hermitian(h, kI), testing::simple_beamsplitter(0.3, 0.0)),
              1e-14);
}

TEST(MatrixExp, RandomHermitianInverse) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const ComplexMatrix h = testing::random_hermitian(4, seed);
        const ComplexMatrix prod = matrix_exp_hermitian(h, kI) * matrix_exp_hermitian(h, -kI);
        EXPECT_LE(max_abs_diff(prod, ComplexMatrix::Identity(4, 4)), 1e-12);
    }
}

TEST(MatrixExp, MatchesTaylorSeries) {
    const ComplexMatrix h = testing::random_hermitian(3, 11) * 0.2;
    ComplexMatrix term = ComplexMatrix::Identity(3, 3);
    ComplexMatrix sum = term;
    for (int k = 1; k < 40; ++k) {
        term = term * (kI * h) / static_cast<double>(k);
        sum += term;
    }
    EXPECT_LT(max_abs_diff(matrix_exp_hermitian(h, kI), sum), 1e-13);
}

TEST(MatrixExp, RejectsNonHermitian) {
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(0, 1) = 1.0;
    EXPECT_THROW((void)matrix_exp_hermitian(h, kI), ValidationError);
}

TEST(Haar, SingleModeIsPhase) {
    const ComplexMatrix u = haar_random_unitary(1, 3);
    ASSERT_EQ(u.rows(), 1);
    EXPECT_NEAR(std::abs(u(0, 0)), 1.0, 1e-15);
}

TEST(Haar, Deterministic) {
    EXPECT_EQ(max_abs_diff(haar_random_unitary(3, 42), haar_random_unitary(3, 42)), 0.0);
    EXPECT_GT(max_abs_diff(haar_random_unitary(3, 42), haar_random_unitary(3, 43)), 0.0);
}

TEST(Haar, UnitaryToTightTolerance) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        EXPECT_LE(check_unitary(haar_random_unitary(6, seed), 1e-12).max_deviation, 1e-12);
    }
}

TEST(Haar, ZeroModesThrows) { EXPECT_THROW((void)haar_random_unitary(0, 1), DimensionError); }

TEST(Haar, FirstMomentIsUniform) {
    double acc = 0.0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        acc += std::norm(haar_random_unitary(5, seed)(0, 0));
    }
    EXPECT_NEAR(acc / 1000.0, 0.2, 0.02);
}

TEST(Kron, FirstFactorIsMostSignificant) {
    ComplexMatrix a(2, 2);
    a << 1, 2, 3, 4;
    const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
    const ComplexMatrix k = kron(a, id);
    EXPECT_EQ(k(2, 0), Complex(3.0));
    EXPECT_EQ(k(1, 0), Complex(0.0));
}

TEST(PolarProject, ReturnsNearestUnitary) {
    const ComplexMatrix u = haar_random_unitary(4, 5);
    const ComplexMatrix noisy = u + testing::random_complex(4, 9) * 1e-9;
    const ComplexMatrix p = polar_project(noisy);
    EXPECT_TRUE(check_unitary(p, 1e-12).passed);
    EXPECT_LT(max_abs_diff(p, u), 1e-8);
}

} // namespace
} // namespace fockc
