// Copyright 2026 The whichway Authors
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

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "whichway/cli/config.hpp"
#include "whichway/cli/format.hpp"

namespace whichway::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumeric = 2;

/// Tables behind each subcommand, for callers that skip the file layer.
Table pattern_table(const RunConfig &cfg, IntensityMode mode);
Table scan_duality_table(const SweepConfig &cfg);
Table eraser_table(const RunConfig &cfg);
/// Rows for `samples` Fibonacci-lattice states, then a `min` summary row.
Table uncertainty_table(std::size_t samples);
Table bohr_table(const RunConfig &cfg);

/// Points of the Fibonacci lattice on the unit sphere; the first and last
/// are the poles (0, 0, 1) and (0, 0, -1). One sample gives the north pole.
std::vector<std::array<double, 3>> fibonacci_sphere(std::size_t samples);

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Data goes to --out or `out`; diagnostics go to `err`.
/// Returns 0 on success, 1 on configuration errors, 2 on numeric failures.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace whichway::cli
