// Copyright 2026 The geophase Authors
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

#include "geophase/linalg.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "geophase/su2_protocol.hpp"
#include "oracles.hpp"

namespace geophase {
namespace {

const Complex kI{0.0, 1.0};

TEST(SquareMatrixTest, RejectsBadShapes) {
  EXPECT_THROW(SquareMatrix(0), std::invalid_argument);
  EXPECT_THROW(SquareMatrix(2, {1.0, 0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(SquareMatrix(1, {Complex{std::numeric_limits<double>::quiet_NaN(), 0.0}}), std::invalid_argument);
  EXPECT_THROW(SquareMatrix(1, {Complex{0.0, std::numeric_limits<double>::infinity()}}), std::invalid_argument);
}

TEST(BasisVectorTest, SingleUnitEntry) {
  const BasisVector k(3, 1);
  EXPECT_EQ(k[0], Complex(0.0));
  EXPECT_EQ(k[1], Complex(1.0));
  EXPECT_EQ(k[2], Complex(0.0));
  EXPECT_THROW(BasisVector(3, 3), std::invalid_argument);
}

TEST(MatMulTest, IdentityLeavesMatrixUnchanged) {
  const SquareMatrix m(2, {Complex{1, 2}, Complex{-3, 0.5}, Complex{0, -1}, Complex{4, 4}});
  EXPECT_EQ(mat_mul(SquareMatrix::identity(2), m), m);
  EXPECT_EQ(mat_mul(m, SquareMatrix::identity(2)), m);
}

TEST(MatMulTest, ImaginaryDiagonalSquares) {
  const SquareMatrix d(2, {kI, 0.0, 0.0, -kI});
  EXPECT_EQ(mat_mul(d, d), SquareMatrix(2, {-1.0, 0.0, 0.0, -1.0}));
}

TEST(MatMulTest, MatchesHandExpandedProduct) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = oracle::random_matrix(rng, 2);
    const auto b = oracle::random_matrix(rng, 2);
    EXPECT_LE(max_abs_diff(mat_mul(a, b), oracle::hand_product_2x2(a, b)), 1e-14);
  }
}

TEST(MatMulTest, DimensionMismatchRejected) {
  EXPECT_THROW(mat_mul(SquareMatrix::identity(2), SquareMatrix::identity(3)), std::invalid_argument);
}

TEST(DaggerTest, RealSymmetricIsSelfAdjoint) {
  const SquareMatrix m(2, {2.0, -1.5, -1.5, 0.25});
  EXPECT_EQ(dagger(m), m);
}

TEST(DaggerTest, SingleEntry) {
  const SquareMatrix m(2, {0.0, kI, 0.0, 0.0});
  EXPECT_EQ(dagger(m), SquareMatrix(2, {0.0, 0.0, -kI, 0.0}));
}

TEST(DaggerTest, ProtocolMatrixMatchesSymbolicAdjoint) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> freq(0.1, 10.0), time(0.0, 20.0), ph(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const ProtocolParams p{freq(rng), freq(rng), ph(rng), time(rng)};
    const auto amps = solve_transport_amplitudes(p.omega1, p.omega2);
    EXPECT_LE(max_abs_diff(dagger(unitary_at(p, amps)), oracle::protocol_dagger(p, amps.a(), amps.b())), 1e-14);
  }
}

TEST(DaggerTest, InvolutionIsBitExact) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto a = oracle::random_matrix(rng, n);
    EXPECT_EQ(dagger(dagger(a)), a);
  }
}

TEST(TraceTest, Basics) {
  EXPECT_EQ(trace(SquareMatrix::identity(4)), Complex(4.0));
  const std::vector<Complex> d = {std::polar(1.0, kPi / 2), std::polar(1.0, -kPi / 2)};
  EXPECT_NEAR(std::abs(trace(SquareMatrix::diagonal(d))), 0.0, 1e-15);
}

TEST(TraceTest, CyclicUnderRandomProducts) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = oracle::random_matrix(rng, n);
      const auto b = oracle::random_matrix(rng, n);
      // Entries are O(1) Gaussians; scale the bound with the number of terms.
      EXPECT_LE(std::abs(trace(mat_mul(a, b)) - trace(mat_mul(b, a))), 1e-12 * n);
    }
  }
}

TEST(IsUnitaryTest, Examples) {
  EXPECT_TRUE(is_unitary(SquareMatrix::identity(2), 1e-12));
  EXPECT_FALSE(is_unitary(SquareMatrix(2, {1.0, 1.0, 0.0, 1.0}), 1e-6));
  EXPECT_THROW(is_unitary(SquareMatrix::identity(2), 0.0), std::invalid_argument);
}

TEST(IsUnitaryTest, ProtocolMatrixAtRandomDraws) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> freq(0.01, 10.0), time(0.0, 50.0), ph(-3.14, 3.14), ang(0.0, kPi / 2);
  for (int trial = 0; trial < 100; ++trial) {
    const double angle = ang(rng);
    const AmplitudePair amps(std::cos(angle), std::sqrt(1.0 - std::cos(angle) * std::cos(angle)));
    const auto u = unitary_at({freq(rng), freq(rng), ph(rng), time(rng)}, amps);
    EXPECT_TRUE(is_unitary(u, 1e-12));
    EXPECT_LE(std::abs(trace(u)), 2.0 + 1e-12);
  }
}

TEST(PolarScalarTest, Examples) {
  const Polar minus_one = polar_scalar(-1.0);
  EXPECT_EQ(minus_one.modulus, 1.0);
  EXPECT_EQ(*minus_one.argument, kPi);

  // -1 - 0i sits on the cut from below; still normalized to +pi.
  EXPECT_EQ(*polar_scalar(Complex{-1.0, -0.0}).argument, kPi);

  const Polar half_i = polar_scalar({0.0, 0.5});
  EXPECT_EQ(half_i.modulus, 0.5);
  EXPECT_DOUBLE_EQ(*half_i.argument, kPi / 2);

  const Polar diag = polar_scalar({1.0, 1.0});
  EXPECT_NEAR(diag.modulus, 1.4142135623730951, 1e-16);
  EXPECT_NEAR(*diag.argument, 0.78539816339744831, 1e-16);
}

TEST(PolarScalarTest, ZeroHasNoArgument) {
  const Polar zero = polar_scalar(0.0);
  EXPECT_EQ(zero.modulus, 0.0);
  EXPECT_FALSE(zero.argument.has_value());
  EXPECT_THROW(polar_scalar({std::numeric_limits<double>::infinity(), 0.0}), std::invalid_argument);
}

TEST(PolarScalarTest, ReconstructsAcrossMagnitudes) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> log_mod(-6.0, 6.0), ang(-kPi, kPi);
  for (int trial = 0; trial < 10000; ++trial) {
    const Complex z = std::polar(std::pow(10.0, log_mod(rng)), ang(rng));
    const Polar p = polar_scalar(z);
    ASSERT_TRUE(p.argument.has_value());
    EXPECT_GT(*p.argument, -kPi);
    EXPECT_LE(*p.argument, kPi);
    EXPECT_LE(std::abs(std::polar(p.modulus, *p.argument) - z) / std::abs(z), 1e-14);
  }
}

TEST(WrapPhaseTest, BranchEdges) {
  EXPECT_EQ(wrap_phase(kPi), kPi);
  EXPECT_EQ(wrap_phase(-kPi), kPi);
  EXPECT_EQ(wrap_phase(3 * kPi), kPi);
  EXPECT_NEAR(wrap_phase(2 * kPi + 0.25), 0.25, 1e-15);
  EXPECT_NEAR(wrap_phase(-2.5 * kPi), -0.5 * kPi, 1e-15);
  EXPECT_FALSE(std::signbit(wrap_phase(-0.0)));
  EXPECT_NEAR(angular_distance(kPi - 1e-9, -kPi + 1e-9), 2e-9, 1e-15);
}

TEST(DeterminantTest, TwoByTwo) {
  EXPECT_EQ(determinant_2x2(SquareMatrix(2, {1.0, 2.0, 3.0, 4.0})), Complex(-2.0));
  EXPECT_THROW(determinant_2x2(SquareMatrix::identity(3)), std::invalid_argument);
}

TEST(SandwichTest, BasisVectorSelectsDiagonal) {
  const SquareMatrix m(2, {Complex{1, 2}, 3.0, 4.0, Complex{5, -6}});
  const std::vector<Complex> e1 = {0.0, 1.0};
  EXPECT_EQ(sandwich(e1, m, e1), Complex(5, -6));
  EXPECT_EQ(diagonal_element(m, BasisVector(2, 0)), Complex(1, 2));
}

}  // namespace
}  // namespace geophase
