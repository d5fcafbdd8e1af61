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

#include <cstddef>
#include <variant>
#include <vector>

#include "geophase/config.hpp"

namespace geophase {

/// Finite-difference step for the residual columns of su2 rows.
inline constexpr double kSweepResidualStep = 1e-6;

struct Su2Row {
  double t;
  double omega1;
  double omega2;
  double phi;
  double beta;
  double omega_field;
  double w1;
  double w2;
  double a;
  double b;
  double visibility;
  double phase;  ///< NaN when !defined
  bool defined;
  double res1_mag;
  double res2_mag;
};

struct BlochRow {
  double omega_solid;
  double r;
  double visibility;
  double phase;  ///< NaN when !defined
  bool defined;
};

using SweepRows = std::variant<std::vector<Su2Row>, std::vector<BlochRow>>;

Su2Row evaluate_su2(double omega1, double omega2, double phi, double t, double beta, double omega_field,
                    double degeneracy_tol);
BlochRow evaluate_bloch(double r, double omega_solid, double degeneracy_tol);

/// One row per grid point in ascending order of the swept value. `workers`
/// threads share the grid; the result does not depend on their number.
SweepRows run_sweep(const SweepConfig& cfg, unsigned workers = 1);

}  // namespace geophase
