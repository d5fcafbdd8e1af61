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

// Bloch-vector model of a spin-1/2 mixed state whose vector of length r
// encloses a geodesic solid angle Omega. The eigen-weights (1 - r)/2 and
// (1 + r)/2 pick up phases +Omega/2 and -Omega/2, so the interference sum is
//
//   (1 - r)/2 e^{i Omega/2} + (1 + r)/2 e^{-i Omega/2} = cos(Omega/2) - i r sin(Omega/2).

#include <array>
#include <vector>

#include "geophase/mixed_phase.hpp"

namespace geophase {

struct BlochParams {
  double r;            ///< Bloch vector length in [0, 1]
  double omega_solid;  ///< enclosed solid angle, any finite real
};

void validate(const BlochParams& params);

/// Polar form of the weighted eigenphase sum.
PhaseResult bloch_mixed_phase(const BlochParams& params, double degeneracy_tol = kDefaultDegeneracyTol);

/// sqrt(cos^2(Omega/2) + r^2 sin^2(Omega/2)) and -atan2(r sin(Omega/2), cos(Omega/2)).
PhaseResult bloch_closed_form(const BlochParams& params, double degeneracy_tol = kDefaultDegeneracyTol);

/// diag(e^{i Omega/2}, e^{-i Omega/2}) paired with weights ((1 - r)/2, (1 + r)/2).
SquareMatrix bloch_unitary(double omega_solid);
MixedState bloch_state(double r);

using Vec3 = std::array<double, 3>;

/// Closed loop of unit vectors joined by minor great-circle arcs.
class GeodesicPolygon {
 public:
  /// Requires >= 3 vertices, each of unit norm within 1e-12, with no
  /// consecutive pair (including last -> first) repeated or antipodal.
  explicit GeodesicPolygon(std::vector<Vec3> vertices);

  const std::vector<Vec3>& vertices() const noexcept { return vertices_; }

 private:
  std::vector<Vec3> vertices_;
};

/// Signed solid angle, positive for counterclockwise traversal seen from
/// outside. Computed as a fan of geodesic triangles from the first vertex.
double polygon_solid_angle(const GeodesicPolygon& polygon);

/// Signed solid angle of the geodesic triangle (a, b, c).
double triangle_solid_angle(const Vec3& a, const Vec3& b, const Vec3& c);

}  // namespace geophase
