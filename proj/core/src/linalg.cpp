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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace geophase {
namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_dim(const SquareMatrix& a, const SquareMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()) + ")");
  }
}

}  // namespace

SquareMatrix::SquareMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
  if (dim == 0) throw std::invalid_argument("SquareMatrix: dimension must be >= 1");
}

SquareMatrix::SquareMatrix(std::size_t dim, std::vector<Complex> row_major) : dim_(dim), entries_(std::move(row_major)) {
  if (dim == 0) throw std::invalid_argument("SquareMatrix: dimension must be >= 1");
  if (entries_.size() != dim * dim) {
    throw std::invalid_argument("SquareMatrix: expected " + std::to_string(dim * dim) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  if (!std::all_of(entries_.begin(), entries_.end(), is_finite)) {
    throw std::invalid_argument("SquareMatrix: entries must be finite");
  }
}

SquareMatrix::SquareMatrix(std::size_t dim, std::initializer_list<Complex> row_major)
    : SquareMatrix(dim, std::vector<Complex>(row_major)) {}

SquareMatrix SquareMatrix::identity(std::size_t dim) {
  std::vector<Complex> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return SquareMatrix(dim, std::move(e));
}

SquareMatrix SquareMatrix::diagonal(std::span<const Complex> entries) {
  const std::size_t n = entries.size();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = entries[i];
  return SquareMatrix(n, std::move(e));
}

BasisVector::BasisVector(std::size_t dim_, std::size_t index_) : dim(dim_), index(index_) {
  if (dim == 0 || index >= dim) {
    throw std::invalid_argument("BasisVector: index " + std::to_string(index) + " out of range for dim " +
                                std::to_string(dim));
  }
}

SquareMatrix mat_mul(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "mat_mul");
  const std::size_t n = a.dim();
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b(k, j);
    }
  }
  return SquareMatrix(n, std::move(out));
}

SquareMatrix dagger(const SquareMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<Complex> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[j * n + i] = std::conj(a(i, j));
  }
  return SquareMatrix(n, std::move(out));
}

Complex trace(const SquareMatrix& a) {
  Complex sum{};
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a(i, i);
  return sum;
}

double max_abs_diff(const SquareMatrix& a, const SquareMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

bool is_unitary(const SquareMatrix& a, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("is_unitary: tolerance must be > 0");
  return max_abs_diff(mat_mul(dagger(a), a), SquareMatrix::identity(a.dim())) <= tol;
}

Complex diagonal_element(const SquareMatrix& a, const BasisVector& k) {
  if (k.dim != a.dim()) throw std::invalid_argument("diagonal_element: basis vector dimension mismatch");
  return a(k.index, k.index);
}

std::vector<Complex> mat_vec(const SquareMatrix& a, std::span<const Complex> v) {
  const std::size_t n = a.dim();
  if (v.size() != n) throw std::invalid_argument("mat_vec: vector length mismatch");
  std::vector<Complex> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

Complex sandwich(std::span<const Complex> u, const SquareMatrix& a, std::span<const Complex> v) {
  if (u.size() != a.dim()) throw std::invalid_argument("sandwich: vector length mismatch");
  const auto av = mat_vec(a, v);
  Complex sum{};
  for (std::size_t i = 0; i < u.size(); ++i) sum += std::conj(u[i]) * av[i];
  return sum;
}

Complex determinant_2x2(const SquareMatrix& a) {
  if (a.dim() != 2) throw std::invalid_argument("determinant_2x2: matrix is not 2 x 2");
  return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

double wrap_phase(double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("wrap_phase: angle must be finite");
  if (angle > -kPi && angle <= kPi) return angle + 0.0;  // + 0.0 folds -0 into +0
  double r = std::remainder(angle, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r + 0.0;
}

double angular_distance(double a, double b) { return std::abs(wrap_phase(a - b)); }

Polar polar_scalar(Complex z) {
  if (!is_finite(z)) throw std::invalid_argument("polar_scalar: scalar must be finite");
  const double modulus = std::abs(z);
  if (modulus == 0.0) return {0.0, std::nullopt};
  return {modulus, wrap_phase(std::atan2(z.imag(), z.real()))};
}

}  // namespace geophase
