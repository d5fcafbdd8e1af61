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

#include "geophase/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "geophase/linalg.hpp"

namespace geophase {
namespace {

using json = nlohmann::json;

const std::set<std::string> kTextKeys = {"model", "sweep", "format", "output"};
const std::set<std::string> kSu2Only = {"omega1", "omega2", "phi", "t", "beta", "omega_field"};
const std::set<std::string> kBlochOnly = {"r", "omega_solid"};

const std::vector<std::string> kSu2Sweepable = {"t", "omega1", "omega2", "phi", "beta", "omega_field"};
const std::vector<std::string> kBlochSweepable = {"omega_solid", "r"};

std::string render(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Describes the violated constraint of parameter `key` at `value`, if any.
std::optional<std::string> domain_violation(const std::string& key, double value) {
  if (!std::isfinite(value)) return "must be finite";
  if (key == "omega1" || key == "omega2" || key == "omega_field" || key == "degeneracy_tol") {
    if (!(value > 0.0)) return "> 0";
  } else if (key == "t" || key == "beta") {
    if (!(value >= 0.0)) return ">= 0";
  } else if (key == "phi") {
    if (!(value > -kPi && value <= kPi)) return "in (-pi, pi]";
  } else if (key == "r") {
    if (!(value >= 0.0 && value <= 1.0)) return "in [0, 1]";
  }
  return std::nullopt;
}

std::optional<double> parse_number(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) return std::nullopt;
  return value;
}

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error([&] {
        std::string joined = "invalid configuration:";
        for (const auto& p : problems) joined += "\n  " + p;
        return joined;
      }()),
      problems_(std::move(problems)) {}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {"model", "sweep", "start", "end", "steps", "omega1",
                                                "omega2", "phi", "t", "beta", "omega_field", "r",
                                                "omega_solid", "format", "output", "degeneracy_tol"};
  return keys;
}

std::string_view to_string(Model model) { return model == Model::su2 ? "su2" : "bloch"; }
std::string_view to_string(OutputFormat format) { return format == OutputFormat::csv ? "csv" : "json"; }

SweepConfig parse_config(std::string_view document, const FlagOverrides& flags) {
  std::vector<std::string> problems;
  const auto& known = config_keys();
  auto is_known = [&](const std::string& k) { return std::find(known.begin(), known.end(), k) != known.end(); };

  // Merged raw values: file first, flags on top.
  std::map<std::string, json> values;

  const bool has_document = std::any_of(document.begin(), document.end(), [](char c) { return !std::isspace(c); });
  if (has_document) {
    json doc;
    try {
      doc = json::parse(document);
    } catch (const json::parse_error& e) {
      throw ConfigError({std::string("configuration is not valid JSON: ") + e.what()});
    }
    if (!doc.is_object()) throw ConfigError({"configuration must be a flat JSON object"});
    for (const auto& [key, value] : doc.items()) {
      if (!is_known(key)) {
        problems.push_back("unknown key '" + key + "'");
        continue;
      }
      if (kTextKeys.count(key)) {
        if (!value.is_string()) {
          problems.push_back("key '" + key + "' must be a string");
          continue;
        }
      } else if (!value.is_number()) {
        problems.push_back("key '" + key + "' must be a number");
        continue;
      }
      values[key] = value;
    }
  }

  for (const auto& [key, text] : flags) {
    if (!is_known(key)) {
      problems.push_back("unknown key '" + key + "'");
      continue;
    }
    if (kTextKeys.count(key)) {
      values[key] = text;
    } else if (auto number = parse_number(text)) {
      values[key] = *number;
    } else {
      problems.push_back("key '" + key + "' must be a number, got '" + text + "'");
    }
  }

  SweepConfig cfg;
  auto number = [&](const std::string& key) { return values.at(key).get<double>(); };

  // Model decides which keys apply.
  std::optional<Model> model;
  if (values.count("model")) {
    const auto name = values["model"].get<std::string>();
    if (name == "su2") {
      model = Model::su2;
    } else if (name == "bloch") {
      model = Model::bloch;
    } else {
      problems.push_back("model = '" + name + "' violates constraint: one of su2, bloch");
    }
  }

  std::vector<std::string> missing;
  for (const char* key : {"model", "sweep", "start", "end", "steps"}) {
    if (!values.count(key)) missing.emplace_back(key);
  }

  if (model) {
    cfg.model = *model;
    const auto& foreign = *model == Model::su2 ? kBlochOnly : kSu2Only;
    for (const auto& key : foreign) {
      if (values.count(key)) {
        problems.push_back("key '" + key + "' does not apply to model " + std::string(to_string(*model)));
      }
    }
    const auto& sweepable = *model == Model::su2 ? kSu2Sweepable : kBlochSweepable;
    if (values.count("sweep")) {
      cfg.range.variable = values["sweep"].get<std::string>();
      if (std::find(sweepable.begin(), sweepable.end(), cfg.range.variable) == sweepable.end()) {
        std::string allowed;
        for (const auto& s : sweepable) allowed += (allowed.empty() ? "" : ", ") + s;
        problems.push_back("sweep = '" + cfg.range.variable + "' violates constraint: one of " + allowed);
      }
    }
    const std::vector<std::string> required =
        *model == Model::su2 ? std::vector<std::string>{"omega1", "omega2"} : std::vector<std::string>{"r"};
    for (const auto& key : required) {
      if (!values.count(key) && cfg.range.variable != key) missing.push_back(key);
    }
  }

  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    problems.push_back("missing required keys: " + list);
  }

  // Fixed parameters.
  auto assign = [&](const std::string& key, double& slot) {
    if (!values.count(key)) return;
    slot = number(key);
    if (key == cfg.range.variable) return;
    if (auto violation = domain_violation(key, slot)) {
      problems.push_back(key + " = " + render(slot) + " violates constraint " + *violation);
    }
  };
  assign("omega1", cfg.omega1);
  assign("omega2", cfg.omega2);
  assign("phi", cfg.phi);
  assign("t", cfg.t);
  assign("beta", cfg.beta);
  assign("omega_field", cfg.omega_field);
  assign("r", cfg.r);
  assign("omega_solid", cfg.omega_solid);
  assign("degeneracy_tol", cfg.degeneracy_tol);

  // Range.
  if (values.count("start")) cfg.range.start = number("start");
  if (values.count("end")) cfg.range.end = number("end");
  if (values.count("steps")) {
    const double steps = number("steps");
    if (!(steps >= 1.0) || std::floor(steps) != steps || steps > 1e9) {
      problems.push_back("steps = " + render(steps) + " violates constraint: integer >= 1");
    } else {
      cfg.range.steps = static_cast<std::size_t>(steps);
    }
  }
  if (values.count("start") && values.count("end")) {
    if (!(cfg.range.start <= cfg.range.end)) {
      problems.push_back("start = " + render(cfg.range.start) + " violates constraint <= end (" +
                         render(cfg.range.end) + ")");
    } else if (cfg.range.steps > 1 && cfg.range.start == cfg.range.end) {
      problems.push_back("start = end = " + render(cfg.range.start) + " violates constraint: steps > 1 needs start < end");
    }
    if (!cfg.range.variable.empty()) {
      for (const char* bound : {"start", "end"}) {
        const double v = std::string(bound) == "start" ? cfg.range.start : cfg.range.end;
        if (auto violation = domain_violation(cfg.range.variable, v)) {
          problems.push_back(std::string(bound) + " = " + render(v) + " violates constraint on " +
                             cfg.range.variable + ": " + *violation);
        }
      }
    }
  }

  if (values.count("format")) {
    const auto f = values["format"].get<std::string>();
    if (f == "csv") {
      cfg.format = OutputFormat::csv;
    } else if (f == "json") {
      cfg.format = OutputFormat::json;
    } else {
      problems.push_back("format = '" + f + "' violates constraint: one of csv, json");
    }
  }
  if (values.count("output")) {
    cfg.output = values["output"].get<std::string>();
    if (cfg.output.empty()) problems.push_back("output violates constraint: non-empty path or '-'");
  }

  if (!problems.empty()) throw ConfigError(std::move(problems));
  return cfg;
}

std::vector<double> grid_points(const SweepRange& range) {
  std::vector<double> points(range.steps);
  if (range.steps == 1) {
    points[0] = range.start;
    return points;
  }
  const double span = range.end - range.start;
  const double last = static_cast<double>(range.steps - 1);
  for (std::size_t i = 0; i < range.steps; ++i) points[i] = range.start + span * (static_cast<double>(i) / last);
  points.back() = range.end;
  return points;
}

std::string format_config(const SweepConfig& cfg) {
  json out = json::object();
  out["model"] = std::string(to_string(cfg.model));
  out["sweep"] = cfg.range.variable;
  out["start"] = cfg.range.start;
  out["end"] = cfg.range.end;
  out["steps"] = cfg.range.steps;
  if (cfg.model == Model::su2) {
    out["omega1"] = cfg.omega1;
    out["omega2"] = cfg.omega2;
    out["phi"] = cfg.phi;
    out["t"] = cfg.t;
    out["beta"] = cfg.beta;
    out["omega_field"] = cfg.omega_field;
  } else {
    out["r"] = cfg.r;
    out["omega_solid"] = cfg.omega_solid;
  }
  out["format"] = std::string(to_string(cfg.format));
  out["output"] = cfg.output;
  out["degeneracy_tol"] = cfg.degeneracy_tol;
  return out.dump(2);
}

}  // namespace geophase
