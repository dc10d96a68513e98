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

// JSON run and sweep configuration. Unknown keys anywhere are rejected, and
// every problem surfaces as ValidationError. The schema is documented in
// docs/config.md.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "whichway/interferometer.hpp"
#include "whichway/wavepacket.hpp"

namespace whichway::cli {

enum class Format { csv, json };

Format parse_format(std::string_view name);
std::string_view format_name(Format f) noexcept;

struct DetectorConfig {
    double overlap = 0.0;
    double phase = 0.0;
};

struct EraserConfig {
    bool enabled = false;
    double basis_angle = 0.7853981633974483; // pi/4, the Q basis
};

struct OutputConfig {
    std::optional<Format> format;
    std::optional<std::string> path;
};

struct RunConfig {
    Geometry geometry{};
    std::optional<DetectorConfig> detector;
    std::optional<ScreenGrid> grid;
    EraserConfig eraser;
    OutputConfig output;

    /// Explicit grid, or the default grid for the geometry.
    [[nodiscard]] ScreenGrid grid_or_default() const;
    /// Throws ValidationError if the detector section is absent.
    [[nodiscard]] const DetectorConfig &require_detector() const;
};

enum class SweepParam { overlap, phase, packet_width, screen_dist };

SweepParam parse_sweep_param(std::string_view name);
std::string_view sweep_param_name(SweepParam p) noexcept;

struct SweepConfig {
    RunConfig base;
    SweepParam param = SweepParam::overlap;
    std::vector<double> values;

    /// base with the swept field set to `value`, validated.
    [[nodiscard]] RunConfig at(double value) const;
};

inline constexpr std::size_t kMinGridPoints = 64;

RunConfig parse_run_config(std::string_view json_text);
SweepConfig parse_sweep_config(std::string_view json_text);

/// Whole file as bytes; ValidationError if it cannot be read.
std::string read_file(const std::string &path);

} // namespace whichway::cli
