// Copyright 2026 The nongauss Authors
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

#ifndef NONGAUSS_TOOLS_CLI_H
#define NONGAUSS_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

#include "nongauss/fock.h"

namespace nongauss::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

/// Runs the nongauss command line. CSV and JSON go to `out` (or to --output), diagnostics
/// to `err`. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// Parses a real grid: a single value, `start..stop` (inclusive integer steps) or
/// `start:stop:count[:log]`.
std::vector<double> parse_grid(const std::string &text);
/// Like parse_grid but every point must be an integer.
std::vector<int> parse_int_grid(const std::string &text);

/// Locale-independent shortest form with 12 significant digits.
std::string format_number(double value);

/// Builds a single-mode pure state from a spec such as `fock:1`, `coherent:1.5,0`,
/// `squeezed:0.3`, `zero-n:2`, `cat:2` or `cubic:0.1,0`.
PureState parse_state(const std::string &spec, int cutoff);

}  // namespace nongauss::cli

#endif
