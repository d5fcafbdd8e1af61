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

#include "geophase/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

namespace geophase {
namespace {

std::string format_bool(bool v) { return v ? "true" : "false"; }

std::string json_real(double v) { return std::isnan(v) ? "null" : format_real(v); }

std::vector<std::string> su2_fields(const Su2Row& r, bool as_json) {
  auto real = as_json ? json_real : format_real;
  return {real(r.t),          real(r.omega1), real(r.omega2),     real(r.phi),        real(r.beta),
          real(r.omega_field), real(r.w1),    real(r.w2),         real(r.a),          real(r.b),
          real(r.visibility), real(r.phase),  format_bool(r.defined), real(r.res1_mag), real(r.res2_mag)};
}

std::vector<std::string> bloch_fields(const BlochRow& r, bool as_json) {
  auto real = as_json ? json_real : format_real;
  return {real(r.omega_solid), real(r.r), real(r.visibility), real(r.phase), format_bool(r.defined)};
}

void write_csv_line(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
  out << '\n';
}

template <typename Row, typename Fields>
void write_table(std::ostream& out, OutputFormat format, const std::vector<std::string>& columns,
                 const std::vector<Row>& rows, Fields fields) {
  if (format == OutputFormat::csv) {
    write_csv_line(out, columns);
    for (const auto& row : rows) write_csv_line(out, fields(row, false));
    return;
  }
  out << '[';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto values = fields(rows[i], true);
    out << (i ? ",\n  {" : "\n  {");
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? ", \"" : "\"") << columns[c] << "\": " << values[c];
    out << '}';
  }
  out << (rows.empty() ? "]\n" : "\n]\n");
}

}  // namespace

const std::vector<std::string>& su2_columns() {
  static const std::vector<std::string> columns = {"t",  "omega1", "omega2",     "phi",   "beta",
                                                   "omega_field", "w1", "w2", "a", "b",
                                                   "visibility", "phase", "defined", "res1_mag", "res2_mag"};
  return columns;
}

const std::vector<std::string>& bloch_columns() {
  static const std::vector<std::string> columns = {"omega_solid", "r", "visibility", "phase", "defined"};
  return columns;
}

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value + 0.0);
  return buf;
}

void emit(const SweepRows& rows, OutputFormat format, std::ostream& out) {
  if (const auto* su2 = std::get_if<std::vector<Su2Row>>(&rows)) {
    write_table(out, format, su2_columns(), *su2, su2_fields);
  } else {
    write_table(out, format, bloch_columns(), std::get<std::vector<BlochRow>>(rows), bloch_fields);
  }
}

void emit_to(const SweepRows& rows, OutputFormat format, const std::string& destination) {
  if (destination == "-") {
    emit(rows, format, std::cout);
    std::cout.flush();
    if (!std::cout) throw EmitError("cannot write to standard output");
    return;
  }
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw EmitError("cannot open output file '" + destination + "'");
  emit(rows, format, file);
  file.close();
  if (!file) throw EmitError("failed writing output file '" + destination + "'");
}

}  // namespace geophase
