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

#include "geophase/su2_protocol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace geophase {
namespace {

Complex unit_phasor(double angle) { return {std::cos(angle), std::sin(angle)}; }

void require_positive_frequencies(double omega1, double omega2) {
  if (!std::isfinite(omega1) || !(omega1 > 0.0)) throw std::invalid_argument("omega1 must be finite and > 0");
  if (!std::isfinite(omega2) || !(omega2 > 0.0)) throw std::invalid_argument("omega2 must be finite and > 0");
}

}  // namespace

void validate(const ProtocolParams& params) {
  require_positive_frequencies(params.omega1, params.omega2);
  if (!std::isfinite(params.phi) || !(params.phi > -kPi && params.phi <= kPi)) {
    throw std::invalid_argument("phi must lie in (-pi, pi]");
  }
  if (!std::isfinite(params.t) || !(params.t >= 0.0)) throw std::invalid_argument("t must be finite and >= 0");
}

AmplitudePair::AmplitudePair(double a, double b) : a_(a), b_(b) {
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
    throw std::invalid_argument("AmplitudePair: amplitudes must lie in [0, 1]");
  }
  if (std::abs(a * a + b * b - 1.0) > 1e-14) throw std::invalid_argument("AmplitudePair: a^2 + b^2 must equal 1");
}

AmplitudePair solve_transport_amplitudes(double omega1, double omega2) {
  require_positive_frequencies(omega1, omega2);
  const double total = omega1 + omega2;
  return AmplitudePair(std::sqrt(omega2 / total), std::sqrt(omega1 / total));
}

SquareMatrix unitary_at(const ProtocolParams& params, const AmplitudePair& amps) {
  const double a = amps.a();
  const double b = amps.b();
  const Complex relative = unit_phasor(params.phi);
  return SquareMatrix(2, {a * unit_phasor(-params.omega1 * params.t), b * unit_phasor(params.omega2 * params.t),
                          -relative * b * unit_phasor(-params.omega2 * params.t),
                          relative * a * unit_phasor(params.omega1 * params.t)});
}

SquareMatrix unitary_derivative_at(const ProtocolParams& params, const AmplitudePair& amps) {
  const double a = amps.a();
  const double b = amps.b();
  const double w1 = params.omega1;
  const double w2 = params.omega2;
  const Complex i{0.0, 1.0};
  const Complex relative = unit_phasor(params.phi);
  return SquareMatrix(2, {-i * w1 * a * unit_phasor(-w1 * params.t), i * w2 * b * unit_phasor(w2 * params.t),
                          i * w2 * b * relative * unit_phasor(-w2 * params.t),
                          i * w1 * a * relative * unit_phasor(w1 * params.t)});
}

UnitaryFamily protocol_family(double omega1, double omega2, double phi, const AmplitudePair& amps) {
  validate(ProtocolParams{omega1, omega2, phi, 0.0});
  char label[160];
  std::snprintf(label, sizeof label, "su2(omega1=%.17g, omega2=%.17g, phi=%.17g, a=%.17g, b=%.17g)", omega1, omega2,
                phi, amps.a(), amps.b());
  // t < 0 is allowed here so central differences at t = 0 stay defined.
  return UnitaryFamily(
      2, [=](double t) { return unitary_at(ProtocolParams{omega1, omega2, phi, t}, amps); }, label);
}

ResidualPair closed_form_residuals(double omega1, double omega2, const AmplitudePair& amps) {
  require_positive_frequencies(omega1, omega2);
  const double a2 = amps.a() * amps.a();
  const double b2 = amps.b() * amps.b();
  const Complex r1{0.0, -omega1 * a2 + omega2 * b2};
  return {r1, -r1};
}

DiagonalComponents diagonal_pancharatnam(const ProtocolParams& params, const AmplitudePair& amps) {
  validate(params);
  const double w1t = params.omega1 * params.t;
  return {{amps.a(), wrap_phase(-w1t)}, {amps.a(), wrap_phase(w1t + params.phi)}};
}

PhaseResult analytic_phase_visibility(const ProtocolParams& params, const SpinWeights& weights,
                                      const AmplitudePair& amps, double degeneracy_tol) {
  validate(params);
  if (!(degeneracy_tol > 0.0)) throw std::invalid_argument("degeneracy tolerance must be > 0");
  const double w1 = weights.w1;
  const double w2 = weights.w2;
  const double w1t = params.omega1 * params.t;
  // w1^2 + w2^2 + 2 w1 w2 cos(2 w1 t + phi), regrouped as a sum of nonnegative
  // terms so the node at w1 = w2 does not cancel catastrophically.
  const double half_angle_cos = std::cos(w1t + 0.5 * params.phi);
  const double spread = w1 - w2;
  const double radicand = spread * spread + 4.0 * w1 * w2 * half_angle_cos * half_angle_cos;
  const double visibility = amps.a() * std::sqrt(std::max(radicand, 0.0));
  if (visibility <= degeneracy_tol) return {visibility, std::numeric_limits<double>::quiet_NaN(), false};
  const double numer = -w1 * std::sin(w1t) + w2 * std::sin(w1t + params.phi);
  const double denom = w1 * std::cos(w1t) + w2 * std::cos(w1t + params.phi);
  return {visibility, wrap_phase(std::atan2(numer, denom)), true};
}

}  // namespace geophase
