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

#include "geophase/thermal.hpp"

#include <cmath>
#include <stdexcept>

namespace geophase {

void validate(const ThermalConfig& cfg) {
  if (!std::isfinite(cfg.omega_field) || !(cfg.omega_field > 0.0)) {
    throw std::invalid_argument("omega_field must be finite and > 0");
  }
  if (!std::isfinite(cfg.beta) || !(cfg.beta >= 0.0)) throw std::invalid_argument("beta must be finite and >= 0");
}

SpinWeights boltzmann_weights(const ThermalConfig& cfg) {
  validate(cfg);
  // Divided through by e^x; e^{-2x} <= 1 so nothing overflows.
  const double damped = std::exp(-cfg.omega_field * cfg.beta);
  const double denom = 1.0 + damped;
  return {1.0 / denom, damped / denom};
}

double expected_sz(const ThermalConfig& cfg) {
  validate(cfg);
  return -0.5 * std::tanh(0.5 * cfg.omega_field * cfg.beta);
}

double internal_energy(const ThermalConfig& cfg) { return cfg.omega_field * expected_sz(cfg); }

}  // namespace geophase
