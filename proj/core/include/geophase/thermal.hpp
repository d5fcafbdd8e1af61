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

// Thermal spin-1/2 in a static field, natural units (hbar = k_B = 1).
// Basis index 0 holds |-1/2>, index 1 holds |+1/2>.

#include "geophase/mixed_phase.hpp"

namespace geophase {

struct ThermalConfig {
  double omega_field;  ///< field frequency, > 0
  double beta;         ///< inverse temperature, >= 0
};

/// Throws std::invalid_argument when `cfg` is outside its domain.
void validate(const ThermalConfig& cfg);

struct SpinWeights {
  double w1;  ///< weight of |-1/2>
  double w2;  ///< weight of |+1/2>

  MixedState to_state() const { return MixedState({w1, w2}); }
};

/// Boltzmann occupations with x = omega_field * beta / 2:
/// w1 = e^x / (e^x + e^-x), w2 = e^-x / (e^x + e^-x).
SpinWeights boltzmann_weights(const ThermalConfig& cfg);

/// <s_z> = -tanh(omega_field * beta / 2) / 2.
double expected_sz(const ThermalConfig& cfg);

/// E_0 = omega_field * <s_z>.
double internal_energy(const ThermalConfig& cfg);

}  // namespace geophase
