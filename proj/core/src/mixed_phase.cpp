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

#include "geophase/mixed_phase.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace geophase {

MixedState::MixedState(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("MixedState: at least one weight is required");
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) throw std::invalid_argument("MixedState: weights must be finite and >= 0");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) throw std::invalid_argument("MixedState: weights must sum to 1");
}

UnitaryFamily::UnitaryFamily(std::size_t dim, Evaluator evaluator, std::string label,
                             std::optional<double> unitarity_tol)
    : dim_(dim), evaluator_(std::move(evaluator)), label_(std::move(label)), unitarity_tol_(unitarity_tol) {
  if (dim_ == 0) throw std::invalid_argument("UnitaryFamily: dimension must be >= 1");
  if (!evaluator_) throw std::invalid_argument("UnitaryFamily: evaluator is empty");
  if (unitarity_tol_ && !(*unitarity_tol_ > 0.0)) {
    throw std::invalid_argument("UnitaryFamily: unitarity tolerance must be > 0");
  }
}

SquareMatrix UnitaryFamily::operator()(double t) const {
  SquareMatrix u = evaluator_(t);
  if (u.dim() != dim_) throw std::runtime_error("UnitaryFamily '" + label_ + "': evaluator returned wrong dimension");
  if (unitarity_tol_ && !is_unitary(u, *unitarity_tol_)) {
    throw std::runtime_error("UnitaryFamily '" + label_ + "': matrix is not unitary at t = " + std::to_string(t));
  }
  return u;
}

PhaseResult phase_result_from_sum(Complex sum, double degeneracy_tol) {
  if (!(degeneracy_tol > 0.0)) throw std::invalid_argument("degeneracy tolerance must be > 0");
  const Polar p = polar_scalar(sum);
  if (p.modulus <= degeneracy_tol || !p.argument) {
    return {p.modulus, std::numeric_limits<double>::quiet_NaN(), false};
  }
  return {p.modulus, *p.argument, true};
}

SquareMatrix density_matrix(const MixedState& state) {
  std::vector<Complex> diag(state.weights().begin(), state.weights().end());
  return SquareMatrix::diagonal(diag);
}

std::vector<PancharatnamComponent> pancharatnam_components(const MixedState& state, const SquareMatrix& u) {
  if (u.dim() != state.dim()) throw std::invalid_argument("pancharatnam_components: dimension mismatch");
  std::vector<PancharatnamComponent> out;
  out.reserve(u.dim());
  for (std::size_t k = 0; k < u.dim(); ++k) {
    const Polar p = polar_scalar(diagonal_element(u, BasisVector(u.dim(), k)));
    out.push_back({p.modulus, p.argument});
  }
  return out;
}

PhaseResult mixed_phase(const MixedState& state, const SquareMatrix& u, double degeneracy_tol) {
  if (u.dim() != state.dim()) throw std::invalid_argument("mixed_phase: dimension mismatch");
  Complex sum{};
  for (std::size_t k = 0; k < u.dim(); ++k) sum += state.weight(k) * u(k, k);
  return phase_result_from_sum(sum, degeneracy_tol);
}

SquareMatrix numeric_derivative(const UnitaryFamily& family, double t, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("numeric_derivative: step must be > 0");
  const SquareMatrix plus = family(t + h);
  const SquareMatrix minus = family(t - h);
  const std::size_t n = family.dim();
  std::vector<Complex> d(n * n);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (plus.entries()[i] - minus.entries()[i]) / (2.0 * h);
  return SquareMatrix(n, std::move(d));
}

std::vector<TransportResidual> transport_residuals(const UnitaryFamily& family, double t, double h) {
  const SquareMatrix generator = mat_mul(numeric_derivative(family, t, h), dagger(family(t)));
  std::vector<TransportResidual> out;
  out.reserve(generator.dim());
  for (std::size_t k = 0; k < generator.dim(); ++k) out.push_back({k, generator(k, k)});
  return out;
}

Complex transport_trace_residual(const MixedState& state, const UnitaryFamily& family, double t, double h) {
  if (state.dim() != family.dim()) throw std::invalid_argument("transport_trace_residual: dimension mismatch");
  Complex sum{};
  for (const auto& r : transport_residuals(family, t, h)) sum += state.weight(r.k) * r.value;
  return sum;
}

}  // namespace geophase
