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

// Self-verification suite: each check draws seeded random parameters, measures
// the largest deviation from an identity and compares it with a tolerance.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geophase/su2_protocol.hpp"

namespace geophase {

struct CheckResult {
  std::string name;
  bool passed;
  double max_deviation;
  double tolerance;
};

struct VerifyOptions {
  /// Replaces every tolerance when set.
  std::optional<double> tolerance_override;
  /// Per-check tolerance overrides, keyed by check name.
  std::map<std::string, double> tolerances;
  /// Forces these amplitudes in the transport checks instead of solving for
  /// them (fault injection).
  std::optional<AmplitudePair> amplitude_override;
  std::uint64_t seed = 0x5eed'1234ULL;
  std::size_t draws = 1000;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Check names with their default tolerances, in execution order.
const std::vector<std::pair<std::string, double>>& default_tolerances();

/// Throws std::invalid_argument for unknown tolerance names or nonpositive tolerances.
VerifyReport run_verify(const VerifyOptions& options = {});

/// One line per check: status, name, measured deviation, tolerance.
void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace geophase
