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

#pragma once

// Independent reference computations. Nothing here calls the library routine
// it is used to check; expressions are written out by hand from the defining
// formulas.

#include <cmath>
#include <complex>
#include <random>

#include "geophase/linalg.hpp"
#include "geophase/su2_protocol.hpp"

namespace geophase::oracle {

inline SquareMatrix hand_product_2x2(const SquareMatrix& a, const SquareMatrix& b) {
  return SquareMatrix(2, {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
                          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)});
}

inline Complex expi(double angle) { return std::exp(Complex{0.0, angle}); }

// Conjugate transpose of the protocol matrix, written entry by entry.
inline SquareMatrix protocol_dagger(const ProtocolParams& p, double a, double b) {
  return SquareMatrix(2, {a * expi(p.omega1 * p.t), -b * expi(p.omega2 * p.t) * expi(-p.phi), b * expi(-p.omega2 * p.t),
                          expi(-p.phi) * a * expi(-p.omega1 * p.t)});
}

// d/dt of the protocol matrix, differentiated symbolically.
inline SquareMatrix protocol_derivative(const ProtocolParams& p, double a, double b) {
  const Complex i{0.0, 1.0};
  return SquareMatrix(2, {-i * p.omega1 * a * expi(-p.omega1 * p.t), i * p.omega2 * b * expi(p.omega2 * p.t),
                          i * p.omega2 * b * expi(p.phi) * expi(-p.omega2 * p.t),
                          i * p.omega1 * a * expi(p.phi) * expi(p.omega1 * p.t)});
}

// Weighted interference sum taken straight from the two diagonal exponentials.
inline Complex thermal_interference(double w1, double w2, double a, double omega1, double t, double phi) {
  return w1 * a * expi(-omega1 * t) + w2 * expi(phi) * a * expi(omega1 * t);
}

// Boltzmann weight of the lower level in extended precision.
inline long double lower_weight(long double x) { return std::exp(x) / (std::exp(x) + std::exp(-x)); }

// Right-hand form of the Bloch interference sum.
inline Complex bloch_sum(double r, double omega) { return {std::cos(omega / 2), -r * std::sin(omega / 2)}; }

inline SquareMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> gauss;
  std::vector<Complex> e(n * n);
  for (auto& z : e) z = {gauss(rng), gauss(rng)};
  return SquareMatrix(n, std::move(e));
}

}  // namespace geophase::oracle
