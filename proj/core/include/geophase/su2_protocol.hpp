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

// Two-frequency SU(2) protocol acting on the thermal spin-1/2 state:
//
//   U(t) = [[ a e^{-i w1 t},           b e^{i w2 t}          ],
//           [ -e^{i phi} b e^{-i w2 t}, e^{i phi} a e^{i w1 t} ]],  a^2 + b^2 = 1.
//
// The diagonal transport residuals are -i w1 a^2 + i w2 b^2 and its negative,
// so w1 a^2 = w2 b^2 makes the family parallel transporting. The interference
// sum w1 <0|U|0> + w2 <1|U|1> then gives visibility and geometric phase in
// closed form.

#include <utility>

#include "geophase/linalg.hpp"
#include "geophase/mixed_phase.hpp"
#include "geophase/thermal.hpp"

namespace geophase {

struct ProtocolParams {
  double omega1;  ///< drive frequency 1, > 0
  double omega2;  ///< drive frequency 2, > 0
  double phi;     ///< relative phase in (-pi, pi]
  double t;       ///< evolution time, >= 0
};

void validate(const ProtocolParams& params);

/// Field amplitudes |a|, |b| in [0, 1] with a^2 + b^2 = 1 (within 1e-14).
class AmplitudePair {
 public:
  AmplitudePair(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

 private:
  double a_;
  double b_;
};

/// a = sqrt(w2 / (w1 + w2)), b = sqrt(w1 / (w1 + w2)). Both frequencies must be > 0.
AmplitudePair solve_transport_amplitudes(double omega1, double omega2);

SquareMatrix unitary_at(const ProtocolParams& params, const AmplitudePair& amps);

/// Closed-form dU/dt at `params`.
SquareMatrix unitary_derivative_at(const ProtocolParams& params, const AmplitudePair& amps);

/// Evaluator over t for fixed frequencies, phase and amplitudes.
UnitaryFamily protocol_family(double omega1, double omega2, double phi, const AmplitudePair& amps);

struct ResidualPair {
  Complex r1;  ///< basis index 0
  Complex r2;  ///< basis index 1
};

/// r1 = -i w1 a^2 + i w2 b^2, r2 = -r1 (time independent).
ResidualPair closed_form_residuals(double omega1, double omega2, const AmplitudePair& amps);

struct DiagonalComponents {
  PancharatnamComponent first;   ///< (a, -w1 t)
  PancharatnamComponent second;  ///< (a, w1 t + phi)
};

DiagonalComponents diagonal_pancharatnam(const ProtocolParams& params, const AmplitudePair& amps);

/// Visibility a sqrt(w1^2 + w2^2 + 2 w1 w2 cos(2 w1 t + phi)) and phase
/// atan2(-w1 sin(w1 t) + w2 sin(w1 t + phi), w1 cos(w1 t) + w2 cos(w1 t + phi)).
PhaseResult analytic_phase_visibility(const ProtocolParams& params, const SpinWeights& weights,
                                      const AmplitudePair& amps, double degeneracy_tol = kDefaultDegeneracyTol);

}  // namespace geophase
