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

// geophase: parameter sweeps, self-verification and polygon solid angles.
//
// Exit status: 0 success, 1 usage or configuration error, 2 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "geophase/bloch.hpp"
#include "geophase/config.hpp"
#include "geophase/emit.hpp"
#include "geophase/sweep.hpp"
#include "geophase/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

std::string read_all(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_sweep_command(const std::string& config_path, const std::map<std::string, std::string>& flag_values,
                      const std::vector<std::string>& flag_order, unsigned jobs, bool print_config) {
  std::string document;
  if (!config_path.empty()) {
    std::ifstream file(config_path);
    if (!file) {
      std::cerr << "error: cannot read configuration file '" << config_path << "'\n";
      return kExitUsage;
    }
    document = read_all(file);
  }
  geophase::FlagOverrides overrides;
  for (const auto& key : flag_order) overrides.emplace_back(key, flag_values.at(key));

  try {
    const geophase::SweepConfig cfg = geophase::parse_config(document, overrides);
    if (print_config) std::cerr << geophase::format_config(cfg) << '\n';
    const auto rows = geophase::run_sweep(cfg, jobs);
    geophase::emit_to(rows, cfg.format, cfg.output);
  } catch (const geophase::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

int run_verify_command(std::optional<double> tolerance, const std::vector<std::string>& tol_specs,
                       std::uint64_t seed, std::size_t draws) {
  geophase::VerifyOptions options;
  options.tolerance_override = tolerance;
  options.seed = seed;
  options.draws = draws;
  for (const auto& spec : tol_specs) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --tol expects name=value, got '" << spec << "'\n";
      return kExitUsage;
    }
    try {
      options.tolerances[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "error: --tol value is not a number in '" << spec << "'\n";
      return kExitUsage;
    }
  }
  try {
    const auto report = geophase::run_verify(options);
    geophase::print_report(report, std::cout);
    return report.all_passed() ? kExitOk : kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_bloch_omega_command(const std::string& input_path) {
  std::string text;
  if (input_path.empty() || input_path == "-") {
    text = read_all(std::cin);
  } else {
    std::ifstream file(input_path);
    if (!file) {
      std::cerr << "error: cannot read vertex file '" << input_path << "'\n";
      return kExitUsage;
    }
    text = read_all(file);
  }

  std::vector<geophase::Vec3> vertices;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    geophase::Vec3 v{};
    std::string extra;
    if (!(fields >> v[0] >> v[1] >> v[2]) || (fields >> extra)) {
      std::cerr << "error: line " << line_no << ": expected three numbers\n";
      return kExitUsage;
    }
    vertices.push_back(v);
  }

  try {
    const double omega = geophase::polygon_solid_angle(geophase::GeodesicPolygon(std::move(vertices)));
    std::cout << geophase::format_real(omega) << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric phases of mixed spin-1/2 states"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Evaluate the su2 or bloch model over a one-dimensional grid");
  std::string config_path;
  unsigned jobs = 1;
  bool print_config = false;
  sweep->add_option("--config", config_path, "Flat JSON configuration file");
  sweep->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  sweep->add_flag("--print-config", print_config, "Print the effective configuration to stderr");
  std::map<std::string, std::string> flag_values;
  std::vector<std::string> flag_order;
  for (const auto& key : geophase::config_keys()) {
    std::string names = "--" + key;
    std::string dashed = key;
    std::replace(dashed.begin(), dashed.end(), '_', '-');
    if (dashed != key) names += ",--" + dashed;
    sweep->add_option_function<std::string>(
        names,
        [&flag_values, &flag_order, key](const std::string& value) {
          if (!flag_values.count(key)) flag_order.push_back(key);
          flag_values[key] = value;
        },
        "Overrides '" + key + "' from the configuration file");
  }

  // verify
  auto* verify = app.add_subcommand("verify", "Run the built-in identity checks");
  std::optional<double> tolerance;
  std::vector<std::string> tol_specs;
  std::uint64_t seed = geophase::VerifyOptions{}.seed;
  std::size_t draws = geophase::VerifyOptions{}.draws;
  verify->add_option("--tolerance", tolerance, "Replace every check tolerance");
  verify->add_option("--tol", tol_specs, "Override one tolerance as name=value (repeatable)");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--draws", draws, "Random draws per check")->check(CLI::PositiveNumber);

  // bloch-omega
  auto* bloch_omega = app.add_subcommand("bloch-omega", "Signed solid angle of a geodesic polygon");
  std::string input_path;
  bloch_omega->add_option("--input", input_path, "Vertex file, one 'x y z' triple per line (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (sweep->parsed()) return run_sweep_command(config_path, flag_values, flag_order, jobs, print_config);
  if (verify->parsed()) return run_verify_command(tolerance, tol_specs, seed, draws);
  if (bloch_omega->parsed()) return run_bloch_omega_command(input_path);
  return kExitUsage;
}
