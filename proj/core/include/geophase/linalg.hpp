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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace geophase {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Dense N x N complex matrix with immutable, row-major storage.
///
/// Every entry is finite; construction rejects NaN or Inf components with
/// std::invalid_argument. Intended for the small dimensions (N <= 8) used
/// throughout the library.
class SquareMatrix {
 public:
  /// Zero matrix of dimension `dim` (dim >= 1).
  explicit SquareMatrix(std::size_t dim);
  SquareMatrix(std::size_t dim, std::vector<Complex> row_major);
  SquareMatrix(std::size_t dim, std::initializer_list<Complex> row_major);

  static SquareMatrix identity(std::size_t dim);
  static SquareMatrix diagonal(std::span<const Complex> entries);

  std::size_t dim() const noexcept { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  std::span<const Complex> entries() const noexcept { return entries_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Coordinate basis vector |k> of dimension `dim`; all entries real.
struct BasisVector {
  std::size_t dim;
  std::size_t index;

  BasisVector(std::size_t dim, std::size_t index);
  Complex operator[](std::size_t i) const noexcept { return i == index ? Complex{1.0, 0.0} : Complex{0.0, 0.0}; }
};

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b);
SquareMatrix dagger(const SquareMatrix& a);
Complex trace(const SquareMatrix& a);

/// Largest entry magnitude of a - b. Dimensions must match.
double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b);

/// True iff max |(A^dagger A - I)_ij| <= tol. Requires tol > 0.
bool is_unitary(const SquareMatrix& a, double tol);

/// <k| A |k>, the k-th diagonal entry.
Complex diagonal_element(const SquareMatrix& a, const BasisVector& k);

/// A v for a column vector v of length A.dim().
std::vector<Complex> mat_vec(const SquareMatrix& a, std::span<const Complex> v);

/// <u| A |v> with u conjugated.
Complex sandwich(std::span<const Complex> u, const SquareMatrix& a, std::span<const Complex> v);

/// Determinant of a 2 x 2 matrix.
Complex determinant_2x2(const SquareMatrix& a);

/// Maps any finite angle into (-pi, pi]; -pi itself maps to +pi.
double wrap_phase(double angle);

/// Smallest absolute difference between two angles modulo 2 pi.
double angular_distance(double a, double b);

struct Polar {
  double modulus;
  /// Empty when the scalar is exactly zero.
  std::optional<double> argument;
};

/// Modulus and two-argument arctangent of z; z must be finite.
Polar polar_scalar(Complex z);

}  // namespace geophase
