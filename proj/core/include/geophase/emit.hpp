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

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "geophase/config.hpp"
#include "geophase/sweep.hpp"

namespace geophase {

class EmitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::vector<std::string>& su2_columns();
const std::vector<std::string>& bloch_columns();

/// "%.17g"; NaN renders as "nan" and -0 as "0".
std::string format_real(double value);

void emit(const SweepRows& rows, OutputFormat format, std::ostream& out);

/// Writes to `destination`, or to standard output when it is "-". Throws
/// EmitError naming the path when the file cannot be written.
void emit_to(const SweepRows& rows, OutputFormat format, const std::string& destination);

}  // namespace geophase
