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

#include "geophase/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "geophase/bloch.hpp"
#include "geophase/mixed_phase.hpp"
#include "geophase/su2_protocol.hpp"
#include "geophase/thermal.hpp"

namespace geophase {
namespace {

// Evaluates make_row(i) for every i in [0, count) across `workers` threads,
// keeping results at their grid index.
template <typename Row>
std::vector<Row> fan_out(std::size_t count, unsigned workers, const std::function<Row(std::size_t)>& make_row) {
  std::vector<Row> rows(count);
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) rows[i] = make_row(i);
    return rows;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) rows[i] = make_row(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

}  // namespace

Su2Row evaluate_su2(double omega1, double omega2, double phi, double t, double beta, double omega_field,
                    double degeneracy_tol) {
  const ProtocolParams params{omega1, omega2, phi, t};
  validate(params);
  const SpinWeights weights = boltzmann_weights(ThermalConfig{omega_field, beta});
  const AmplitudePair amps = solve_transport_amplitudes(omega1, omega2);
  const PhaseResult result = analytic_phase_visibility(params, weights, amps, degeneracy_tol);
  const auto residuals = transport_residuals(protocol_family(omega1, omega2, phi, amps), t, kSweepResidualStep);
  return Su2Row{t,
                omega1,
                omega2,
                phi,
                beta,
                omega_field,
                weights.w1,
                weights.w2,
                amps.a(),
                amps.b(),
                result.visibility,
                result.phase,
                result.defined,
                std::abs(residuals[0].value),
                std::abs(residuals[1].value)};
}

BlochRow evaluate_bloch(double r, double omega_solid, double degeneracy_tol) {
  const PhaseResult result = bloch_mixed_phase(BlochParams{r, omega_solid}, degeneracy_tol);
  return BlochRow{omega_solid, r, result.visibility, result.phase, result.defined};
}

SweepRows run_sweep(const SweepConfig& cfg, unsigned workers) {
  const std::vector<double> grid = grid_points(cfg.range);
  const std::string& swept = cfg.range.variable;

  if (cfg.model == Model::bloch) {
    return fan_out<BlochRow>(grid.size(), workers, [&](std::size_t i) {
      double r = cfg.r;
      double omega_solid = cfg.omega_solid;
      (swept == "r" ? r : omega_solid) = grid[i];
      return evaluate_bloch(r, omega_solid, cfg.degeneracy_tol);
    });
  }

  return fan_out<Su2Row>(grid.size(), workers, [&](std::size_t i) {
    double omega1 = cfg.omega1, omega2 = cfg.omega2, phi = cfg.phi, t = cfg.t, beta = cfg.beta;
    double omega_field = cfg.omega_field;
    if (swept == "t") t = grid[i];
    else if (swept == "omega1") omega1 = grid[i];
    else if (swept == "omega2") omega2 = grid[i];
    else if (swept == "phi") phi = grid[i];
    else if (swept == "beta") beta = grid[i];
    else if (swept == "omega_field") omega_field = grid[i];
    return evaluate_su2(omega1, omega2, phi, t, beta, omega_field, cfg.degeneracy_tol);
  });
}

}  // namespace geophase
