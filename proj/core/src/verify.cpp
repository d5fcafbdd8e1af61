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

#include "geophase/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

#include "geophase/bloch.hpp"
#include "geophase/mixed_phase.hpp"
#include "geophase/thermal.hpp"

namespace geophase {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  // (0, hi]
  double positive(double hi) { return hi - uniform(0.0, hi); }
  // (-pi, pi]
  double phase() { return kPi - uniform(0.0, 2.0 * kPi); }

 private:
  std::mt19937_64 engine_;
};

double max_of(double a, double b) { return (std::isnan(a) || std::isnan(b)) ? kInf : std::max(a, b); }

double residual_magnitude(const UnitaryFamily& family, double t, double h) {
  const auto r = transport_residuals(family, t, h);
  return std::max(std::abs(r[0].value), std::abs(r[1].value));
}

struct Check {
  const char* name;
  std::function<double(Sampler&, const VerifyOptions&)> measure;
};

AmplitudePair transport_amplitudes(const VerifyOptions& options, double omega1, double omega2) {
  return options.amplitude_override ? *options.amplitude_override : solve_transport_amplitudes(omega1, omega2);
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"unitarity",
       [](Sampler& s, const VerifyOptions& o) {
         double worst = 0.0;
         for (std::size_t i = 0; i < o.draws; ++i) {
           const double angle = s.uniform(0.0, 0.5 * kPi);
           const AmplitudePair amps(std::cos(angle), std::sqrt(1.0 - std::cos(angle) * std::cos(angle)));
           const SquareMatrix u = unitary_at({s.positive(10.0), s.positive(10.0), s.phase(), s.uniform(0.0, 20.0)}, amps);
           worst = max_of(worst, max_abs_diff(mat_mul(dagger(u), u), SquareMatrix::identity(2)));
         }
         return worst;
       }},
      {"determinant",
       [](Sampler& s, const VerifyOptions& o) {
         double worst = 0.0;
         for (std::size_t i = 0; i < o.draws; ++i) {
           const ProtocolParams p{s.positive(10.0), s.positive(10.0), s.phase(), s.uniform(0.0, 20.0)};
           const SquareMatrix u = unitary_at(p, solve_transport_amplitudes(p.omega1, p.omega2));
           worst = max_of(worst, std::abs(determinant_2x2(u) - std::polar(1.0, p.phi)));
         }
         return worst;
       }},
      {"amplitude_normalization",
       [](Sampler& s, const VerifyOptions& o) {
         double worst = 0.0;
         for (std::size_t i = 0; i < o.draws; ++i) {
           const AmplitudePair amps = transport_amplitudes(o, s.positive(10.0), s.positive(10.0));
           worst = max_of(worst, std::abs(amps.a() * amps.a() + amps.b() * amps.b() - 1.0));
         }
         return worst;
       }},
      {"amplitude_balance",
       [](Sampler& s, const VerifyOptions& o) {
         double worst = 0.0;
         for (std::size_t i = 0; i < o.draws; ++i) {
           const double w1 = s.positive(10.0);
           const double w2 = s.positive(10.0);
           const AmplitudePair amps = transport_amplitudes(o, w1, w2);
           worst = max_of(worst, std::abs(w1 * amps.a() * amps.a() - w2 * amps.b() * amps.b()));
         }
         return worst;
       }},
      {"closed_form_residuals",
       [](Sampler& s, const VerifyOptions& o) {
         double worst = 0.0;
         for (std::size_t i = 0; i < o.draws; ++i) {
           const double w1 = s.positive(10.0);
           const double w2 = s.positive(10.0);
           // Normalized by the frequency scale: a and b carry one rounding each,
           // so the absolute residual grows like (w1 + w2) * eps.
           const auto r = closed_form_residuals(w1, w2, transport_amplitudes(o, w1, w2));
           worst = max_of(worst, std::max(std::abs(r.r1), std::abs(r.r2)) / (w1 + w2));
         }
         return worst;
       }},
      {"numeric_residuals",
       [](Sampler& s, const VerifyOptions& o) {
         double worst = 0.0;
         for (std::size_t i = 0; i < std::min<std::size_t>(o.draws, 200); ++i) {
           const double w1 = s.positive(10.0);
           const double w2 = s.positive(10.0);
           const auto family = protocol_family(w1, w2, s.phase(), transport_amplitudes(o, w1, w2));
           worst = max_of(worst, residual_magnitude(family, s.uniform(0.0, 10.0), 1e-6));
         }
         return worst;
       }},
      {"residual_convergence_order",
       [](Sampler& s, const VerifyOptions& o) {
         // The h^2 coefficient is w1 a^2 (w1^2 - w2^2) / 6; draws keep it away
         // from zero and keep t small so rounding stays below the signal at h = 1e-5.
         double worst = 0.0;
         std::size_t accepted = 0;
         while (accepted < std::min<std::size_t>(o.draws, 50)) {
           const double w1 = s.positive(10.0);
           const double w2 = s.positive(10.0);
           if (w1 * (w2 / (w1 + w2)) * std::abs(w1 * w1 - w2 * w2) < 1.0) continue;
           ++accepted;
           const auto family = protocol_family(w1, w2, s.phase(), transport_amplitudes(o, w1, w2));
           const double t = s.uniform(0.0, 1.0);
           const double r3 = residual_magnitude(family, t, 1e-3);
           const double r4 = residual_magnitude(family, t, 1e-4);
           const double r5 = residual_magnitude(family, t, 1e-5);
           const double coarse = std::log10(r3 / r4);
           const double fine = std::log10(r4 / r5);
           worst = max_of(worst, max_of(std::abs(coarse - 2.0), std::abs(fine - 2.0)));
         }
         return worst;
       }},
      {"phase_closed_form",
       [](Sampler& s, const VerifyOptions& o) {
         double worst = 0.0;
         for (std::size_t i = 0; i < o.draws; ++i) {
           const ProtocolParams p{s.positive(10.0), s.positive(10.0), s.phase(), s.uniform(0.0, 10.0)};
           const SpinWeights weights = boltzmann_weights({1.0, s.uniform(0.0, 20.0)});
           const AmplitudePair amps = solve_transport_amplitudes(p.omega1, p.omega2);
           const PhaseResult closed = analytic_phase_visibility(p, weights, amps);
           const PhaseResult engine = mixed_phase(weights.to_state(), unitary_at(p, amps));
           if (engine.visibility < 1e-9 || !closed.defined || !engine.defined) continue;
           worst = max_of(worst, max_of(std::abs(closed.visibility - engine.visibility),
                                        angular_distance(closed.phase, engine.phase)));
         }
         return worst;
       }},
      {"bloch_closed_form",
       [](Sampler& s, const VerifyOptions& o) {
         double worst = 0.0;
         for (std::size_t i = 0; i < o.draws; ++i) {
           const BlochParams p{s.uniform(0.0, 1.0), s.uniform(-4.0 * kPi, 4.0 * kPi)};
           const PhaseResult sum = bloch_mixed_phase(p);
           const PhaseResult closed = bloch_closed_form(p);
           if (!sum.defined || !closed.defined) continue;
           worst = max_of(worst, max_of(std::abs(sum.visibility - closed.visibility),
                                        angular_distance(sum.phase, closed.phase)));
         }
         return worst;
       }},
      {"bloch_engine",
       [](Sampler& s, const VerifyOptions& o) {
         double worst = 0.0;
         for (std::size_t i = 0; i < o.draws; ++i) {
           const BlochParams p{s.uniform(0.0, 1.0), s.uniform(-4.0 * kPi, 4.0 * kPi)};
           const PhaseResult bloch = bloch_mixed_phase(p);
           const PhaseResult engine = mixed_phase(bloch_state(p.r), bloch_unitary(p.omega_solid));
           if (!bloch.defined || !engine.defined) continue;
           worst = max_of(worst, max_of(std::abs(bloch.visibility - engine.visibility),
                                        angular_distance(bloch.phase, engine.phase)));
         }
         return worst;
       }},
      {"thermal_identities",
       [](Sampler& s, const VerifyOptions& o) {
         double worst = 0.0;
         for (std::size_t i = 0; i < o.draws; ++i) {
           const ThermalConfig cfg{1.0, s.uniform(0.0, 700.0)};
           const SpinWeights w = boltzmann_weights(cfg);
           worst = max_of(worst, std::abs(w.w1 + w.w2 - 1.0));
           worst = max_of(worst, std::abs((w.w1 - w.w2) - std::tanh(0.5 * cfg.beta)));
           worst = max_of(worst, std::abs(expected_sz(cfg) + 0.5 * (w.w1 - w.w2)));
         }
         return worst;
       }},
  };
  return all;
}

}  // namespace

const std::vector<std::pair<std::string, double>>& default_tolerances() {
  static const std::vector<std::pair<std::string, double>> tolerances = {
      {"unitarity", 1e-12},
      {"determinant", 1e-12},
      {"amplitude_normalization", 1e-14},
      {"amplitude_balance", 1e-12},
      {"closed_form_residuals", 1e-15},
      {"numeric_residuals", 1e-7},
      {"residual_convergence_order", 0.2},
      {"phase_closed_form", 1e-10},
      {"bloch_closed_form", 1e-12},
      {"bloch_engine", 1e-12},
      {"thermal_identities", 1e-14},
  };
  return tolerances;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verify(const VerifyOptions& options) {
  const auto& defaults = default_tolerances();
  for (const auto& [name, tol] : options.tolerances) {
    const bool known =
        std::any_of(defaults.begin(), defaults.end(), [&](const auto& entry) { return entry.first == name; });
    if (!known) throw std::invalid_argument("unknown verification check '" + name + "'");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance for '" + name + "' must be > 0");
  }
  if (options.tolerance_override && !(*options.tolerance_override > 0.0)) {
    throw std::invalid_argument("tolerance override must be > 0");
  }
  if (options.draws == 0) throw std::invalid_argument("draw count must be >= 1");

  VerifyReport report;
  std::uint64_t stream = 0;
  for (const auto& check : checks()) {
    double tol = 0.0;
    for (const auto& [name, value] : defaults) {
      if (name == check.name) tol = value;
    }
    if (auto it = options.tolerances.find(check.name); it != options.tolerances.end()) tol = it->second;
    if (options.tolerance_override) tol = *options.tolerance_override;

    // Each check gets its own stream so results do not depend on check order.
    Sampler sampler(options.seed + 0x9e37'79b9'7f4a'7c15ULL * ++stream);
    const double deviation = check.measure(sampler, options);
    report.checks.push_back({check.name, deviation <= tol, deviation, tol});
  }
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  char line[160];
  for (const auto& c : report.checks) {
    std::snprintf(line, sizeof line, "%s  %-28s max_deviation=%.3e  tolerance=%.3e\n", c.passed ? "PASS" : "FAIL",
                  c.name.c_str(), c.max_deviation, c.tolerance);
    out << line;
  }
  std::snprintf(line, sizeof line, "%zu/%zu checks passed\n",
                static_cast<std::size_t>(std::count_if(report.checks.begin(), report.checks.end(),
                                                       [](const CheckResult& c) { return c.passed; })),
                report.checks.size());
  out << line;
}

}  // namespace geophase
