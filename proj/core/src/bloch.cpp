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

#include "geophase/bloch.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace geophase {
namespace {

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

double norm(const Vec3& u) { return std::sqrt(dot(u, u)); }

constexpr double kVertexTol = 1e-12;

}  // namespace

void validate(const BlochParams& params) {
  if (!std::isfinite(params.r) || !(params.r >= 0.0 && params.r <= 1.0)) {
    throw std::invalid_argument("r must lie in [0, 1]");
  }
  if (!std::isfinite(params.omega_solid)) throw std::invalid_argument("omega_solid must be finite");
}

PhaseResult bloch_mixed_phase(const BlochParams& params, double degeneracy_tol) {
  validate(params);
  const double half = 0.5 * params.omega_solid;
  const Complex forward{std::cos(half), std::sin(half)};
  const Complex sum = 0.5 * (1.0 - params.r) * forward + 0.5 * (1.0 + params.r) * std::conj(forward);
  return phase_result_from_sum(sum, degeneracy_tol);
}

PhaseResult bloch_closed_form(const BlochParams& params, double degeneracy_tol) {
  validate(params);
  if (!(degeneracy_tol > 0.0)) throw std::invalid_argument("degeneracy tolerance must be > 0");
  const double half = 0.5 * params.omega_solid;
  const double c = std::cos(half);
  const double s = params.r * std::sin(half);
  const double visibility = std::sqrt(c * c + s * s);
  if (visibility <= degeneracy_tol) return {visibility, std::numeric_limits<double>::quiet_NaN(), false};
  return {visibility, wrap_phase(-std::atan2(s, c)), true};
}

SquareMatrix bloch_unitary(double omega_solid) {
  const double half = 0.5 * omega_solid;
  const Complex forward{std::cos(half), std::sin(half)};
  return SquareMatrix(2, {forward, 0.0, 0.0, std::conj(forward)});
}

MixedState bloch_state(double r) {
  validate(BlochParams{r, 0.0});
  return MixedState({0.5 * (1.0 - r), 0.5 * (1.0 + r)});
}

GeodesicPolygon::GeodesicPolygon(std::vector<Vec3> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw std::invalid_argument("GeodesicPolygon: at least 3 vertices are required");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vec3& v = vertices_[i];
    if (!std::isfinite(v[0]) || !std::isfinite(v[1]) || !std::isfinite(v[2]) ||
        std::abs(norm(v) - 1.0) > kVertexTol) {
      throw std::invalid_argument("GeodesicPolygon: vertex " + std::to_string(i) + " is not a unit vector");
    }
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vec3& u = vertices_[i];
    const Vec3& v = vertices_[(i + 1) % vertices_.size()];
    const double sine = norm(cross(u, v));
    const double cosine = dot(u, v);
    if (sine <= kVertexTol && cosine > 0.0) {
      throw std::invalid_argument("GeodesicPolygon: vertex " + std::to_string(i) + " repeats its successor");
    }
    if (sine <= kVertexTol && cosine < 0.0) {
      throw std::invalid_argument("GeodesicPolygon: vertex " + std::to_string(i) + " is antipodal to its successor");
    }
  }
}

double triangle_solid_angle(const Vec3& a, const Vec3& b, const Vec3& c) {
  // tan(E/2) = a.(b x c) / (1 + a.b + b.c + c.a) for unit vectors.
  const double numer = dot(a, cross(b, c));
  const double denom = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
  return 2.0 * std::atan2(numer, denom);
}

double polygon_solid_angle(const GeodesicPolygon& polygon) {
  const auto& v = polygon.vertices();
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) total += triangle_solid_angle(v[0], v[i], v[i + 1]);
  return total;
}

}  // namespace geophase
