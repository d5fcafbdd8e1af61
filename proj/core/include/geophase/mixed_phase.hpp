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

// Mixed-state Pancharatnam phase under a unitary: diagonal initial density
// matrices over the coordinate basis, interference visibility and phase, and
// finite-difference checks of the parallel-transport conditions
//   <k|_0 dU/dt U^dagger |k>_0 = 0,   k = 0..N-1.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geophase/linalg.hpp"

namespace geophase {

inline constexpr double kDefaultDegeneracyTol = 1e-12;
inline constexpr double kDefaultFamilyUnitarityTol = 1e-10;

/// Classical probabilities w_k over the coordinate basis |k>_0.
class MixedState {
 public:
  /// Throws std::invalid_argument unless every weight is >= 0 and finite and
  /// the weights sum to 1 within 1e-12.
  explicit MixedState(std::vector<double> weights);

  std::size_t dim() const noexcept { return weights_.size(); }
  std::span<const double> weights() const noexcept { return weights_; }
  double weight(std::size_t k) const { return weights_.at(k); }

 private:
  std::vector<double> weights_;
};

/// Time-parametrized N x N unitary. The evaluator must be reentrant and total
/// over the reals; each returned matrix is checked with is_unitary at
/// `unitarity_tol` (pass std::nullopt to skip the check).
class UnitaryFamily {
 public:
  using Evaluator = std::function<SquareMatrix(double)>;

  UnitaryFamily(std::size_t dim, Evaluator evaluator, std::string label,
                std::optional<double> unitarity_tol = kDefaultFamilyUnitarityTol);

  SquareMatrix operator()(double t) const;

  std::size_t dim() const noexcept { return dim_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::size_t dim_;
  Evaluator evaluator_;
  std::string label_;
  std::optional<double> unitarity_tol_;
};

/// Visibility and phase of a weighted interference sum. When `defined` is
/// false the visibility fell to the degeneracy threshold and `phase` is NaN.
struct PhaseResult {
  double visibility;
  double phase;
  bool defined;
};

/// Builds a PhaseResult from a complex interference sum.
PhaseResult phase_result_from_sum(Complex sum, double degeneracy_tol);

struct PancharatnamComponent {
  double modulus;                ///< v_k
  std::optional<double> phase;   ///< beta_k, empty when <k|U|k> == 0
};

struct TransportResidual {
  std::size_t k;
  Complex value;
};

SquareMatrix density_matrix(const MixedState& state);

/// Polar form v_k e^{i beta_k} of each diagonal entry <k|_0 U |k>_0.
std::vector<PancharatnamComponent> pancharatnam_components(const MixedState& state, const SquareMatrix& u);

/// Polar form of sum_k w_k <k|U|k> = Tr[U rho_0].
PhaseResult mixed_phase(const MixedState& state, const SquareMatrix& u,
                        double degeneracy_tol = kDefaultDegeneracyTol);

/// Central difference (U(t+h) - U(t-h)) / 2h, entrywise. Requires h > 0.
SquareMatrix numeric_derivative(const UnitaryFamily& family, double t, double h);

/// Diagonal entries of numeric_derivative(family, t, h) * U(t)^dagger.
std::vector<TransportResidual> transport_residuals(const UnitaryFamily& family, double t, double h);

/// sum_k w_k <k|_0 dU/dt U^dagger |k>_0 = Tr[rho_0 dU/dt U^dagger]; the weaker,
/// trace-weighted form of the transport condition.
Complex transport_trace_residual(const MixedState& state, const UnitaryFamily& family, double t, double h);

}  // namespace geophase
