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

// Sweep configuration: a flat JSON object optionally overridden by
// command-line flags. Recognized keys:
//
//   model          "su2" | "bloch"                          (required)
//   sweep          name of the swept parameter               (required)
//   start, end     swept range, start <= end                 (required)
//   steps          number of grid points, >= 1               (required)
//   omega1, omega2 su2 drive frequencies, > 0                (su2, required unless swept)
//   phi            su2 relative phase in (-pi, pi]           (default 0)
//   t              su2 evolution time, >= 0                  (default 0)
//   beta           inverse temperature, >= 0                 (default 1)
//   omega_field    static field frequency, > 0               (default 1)
//   r              Bloch vector length in [0, 1]             (bloch, required unless swept)
//   omega_solid    enclosed solid angle                      (default 0)
//   format         "csv" | "json"                            (default csv)
//   output         file path, "-" for standard output        (default -)
//   degeneracy_tol visibility threshold for undefined phase  (default 1e-12)

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace geophase {

enum class Model { su2, bloch };
enum class OutputFormat { csv, json };

struct SweepRange {
  std::string variable;
  double start = 0.0;
  double end = 0.0;
  std::size_t steps = 1;
};

struct SweepConfig {
  Model model = Model::su2;
  SweepRange range;

  double omega1 = 0.0;
  double omega2 = 0.0;
  double phi = 0.0;
  double t = 0.0;
  double beta = 1.0;
  double omega_field = 1.0;

  double r = 0.0;
  double omega_solid = 0.0;

  OutputFormat format = OutputFormat::csv;
  std::string output = "-";
  double degeneracy_tol = 1e-12;
};

/// Raised with every problem found in one pass over the configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// (key, value text) pairs; later entries win and all of them win over the document.
using FlagOverrides = std::vector<std::pair<std::string, std::string>>;

/// Parses `document` (a JSON object; empty text means no file) and applies
/// `flags`. Throws ConfigError on unknown keys, type errors, missing required
/// keys (all reported together) and invariant violations.
SweepConfig parse_config(std::string_view document, const FlagOverrides& flags = {});

/// Keys accepted by parse_config.
const std::vector<std::string>& config_keys();

/// Grid points of the range in ascending order; the last point equals `end`.
std::vector<double> grid_points(const SweepRange& range);

/// Effective configuration rendered as a flat JSON object.
std::string format_config(const SweepConfig& cfg);

std::string_view to_string(Model model);
std::string_view to_string(OutputFormat format);

}  // namespace geophase
