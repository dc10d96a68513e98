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
#include "whichway/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "whichway/errors.hpp"

namespace whichway::cli {

namespace {

using nlohmann::json;

void fail(const std::string &where, const std::string &what) {
    detail::fail_validation("config: " + where + ": " + what);
}

void reject_unknown(const json &obj, const std::string &where,
                    std::initializer_list<std::string_view> allowed) {
    if (!obj.is_object()) {
        fail(where, "expected an object");
    }
    for (const auto &item : obj.items()) {
        bool known = false;
        for (auto k : allowed) {
            known = known || item.key() == k;
        }
        if (!known) {
            fail(where, "unknown key '" + item.key() + "'");
        }
    }
}

const json &required(const json &obj, const std::string &where, const char *key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail(where, std::string("missing required key '") + key + "'");
    }
    return *it;
}

double number(const json &v, const std::string &where) {
    if (!v.is_number()) {
        fail(where, "expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        fail(where, "expected a finite number");
    }
    return d;
}

double positive(const json &obj, const std::string &where, const char *key) {
    const std::string path = where + "." + key;
    const double d = number(required(obj, where, key), path);
    if (!(d > 0.0)) {
        fail(path, "must be > 0");
    }
    return d;
}

Geometry parse_geometry(const json &g) {
    const std::string where = "geometry";
    reject_unknown(g, where, {"lambda_d", "slit_sep", "screen_dist", "packet_width"});
    Geometry geom{positive(g, where, "lambda_d"), positive(g, where, "slit_sep"),
                  positive(g, where, "screen_dist"), positive(g, where, "packet_width")};
    geom.validate();
    return geom;
}

DetectorConfig parse_detector(const json &d) {
    const std::string where = "detector";
    reject_unknown(d, where, {"overlap", "phase"});
    DetectorConfig out;
    out.overlap = number(required(d, where, "overlap"), "detector.overlap");
    if (out.overlap < 0.0 || out.overlap > 1.0) {
        fail("detector.overlap", "must lie in [0, 1]");
    }
    if (d.contains("phase")) {
        out.phase = number(d.at("phase"), "detector.phase");
    }
    return out;
}

ScreenGrid parse_grid(const json &g) {
    const std::string where = "grid";
    reject_unknown(g, where, {"x_min", "x_max", "n_points"});
    const json &n = required(g, where, "n_points");
    if (!n.is_number_integer() || n.get<long long>() < 0) {
        fail("grid.n_points", "expected a non-negative integer");
    }
    ScreenGrid grid{number(required(g, where, "x_min"), "grid.x_min"),
                    number(required(g, where, "x_max"), "grid.x_max"),
                    n.get<std::size_t>()};
    if (grid.n_points < kMinGridPoints) {
        fail("grid.n_points", "must be >= " + std::to_string(kMinGridPoints));
    }
    if (!(grid.x_min < grid.x_max)) {
        fail("grid", "x_min must be < x_max");
    }
    return grid;
}

EraserConfig parse_eraser(const json &e) {
    reject_unknown(e, "eraser", {"enabled", "basis_angle"});
    EraserConfig out;
    if (e.contains("enabled")) {
        if (!e.at("enabled").is_boolean()) {
            fail("eraser.enabled", "expected true or false");
        }
        out.enabled = e.at("enabled").get<bool>();
    }
    if (e.contains("basis_angle")) {
        out.basis_angle = number(e.at("basis_angle"), "eraser.basis_angle");
    }
    return out;
}

OutputConfig parse_output(const json &o) {
    reject_unknown(o, "output", {"format", "path"});
    OutputConfig out;
    if (o.contains("format")) {
        if (!o.at("format").is_string()) {
            fail("output.format", "expected a string");
        }
        out.format = parse_format(o.at("format").get<std::string>());
    }
    if (o.contains("path")) {
        if (!o.at("path").is_string() || o.at("path").get<std::string>().empty()) {
            fail("output.path", "expected a non-empty string");
        }
        out.path = o.at("path").get<std::string>();
    }
    return out;
}

RunConfig parse_run_object(const json &root, const std::string &where) {
    reject_unknown(root, where, {"geometry", "detector", "grid", "eraser", "output"});
    RunConfig cfg;
    cfg.geometry = parse_geometry(required(root, where, "geometry"));
    if (root.contains("detector")) {
        cfg.detector = parse_detector(root.at("detector"));
    }
    if (root.contains("grid")) {
        cfg.grid = parse_grid(root.at("grid"));
    }
    if (root.contains("eraser")) {
        cfg.eraser = parse_eraser(root.at("eraser"));
    }
    if (root.contains("output")) {
        cfg.output = parse_output(root.at("output"));
    }
    return cfg;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        detail::fail_validation(std::string("config: invalid JSON: ") + e.what());
    }
}

} // namespace

Format parse_format(std::string_view name) {
    if (name == "csv") {
        return Format::csv;
    }
    if (name == "json") {
        return Format::json;
    }
    detail::fail_validation("unknown output format '" + std::string(name) +
                            "' (expected csv or json)");
}

std::string_view format_name(Format f) noexcept {
    return f == Format::csv ? "csv" : "json";
}

ScreenGrid RunConfig::grid_or_default() const {
    return grid ? *grid : ScreenGrid::default_for(geometry);
}

const DetectorConfig &RunConfig::require_detector() const {
    if (!detector) {
        fail("detector", "section is required for this command");
    }
    return *detector;
}

SweepParam parse_sweep_param(std::string_view name) {
    if (name == "overlap") {
        return SweepParam::overlap;
    }
    if (name == "phase") {
        return SweepParam::phase;
    }
    if (name == "packet_width") {
        return SweepParam::packet_width;
    }
    if (name == "screen_dist") {
        return SweepParam::screen_dist;
    }
    detail::fail_validation("config: sweep_param: unknown parameter '" +
                            std::string(name) + "'");
}

std::string_view sweep_param_name(SweepParam p) noexcept {
    switch (p) {
    case SweepParam::overlap:
        return "overlap";
    case SweepParam::phase:
        return "phase";
    case SweepParam::packet_width:
        return "packet_width";
    case SweepParam::screen_dist:
        return "screen_dist";
    }
    return "unknown";
}

RunConfig SweepConfig::at(double value) const {
    RunConfig cfg = base;
    const std::string where = "values";
    if (!std::isfinite(value)) {
        fail(where, "sweep values must be finite");
    }
    switch (param) {
    case SweepParam::overlap:
        if (value < 0.0 || value > 1.0) {
            fail(where, "overlap values must lie in [0, 1]");
        }
        cfg.detector = DetectorConfig{value, base.require_detector().phase};
        break;
    case SweepParam::phase:
        cfg.detector = DetectorConfig{base.require_detector().overlap, value};
        break;
    case SweepParam::packet_width:
        if (!(value > 0.0)) {
            fail(where, "packet_width values must be > 0");
        }
        cfg.geometry.packet_width = value;
        break;
    case SweepParam::screen_dist:
        if (!(value > 0.0)) {
            fail(where, "screen_dist values must be > 0");
        }
        cfg.geometry.screen_dist = value;
        break;
    }
    cfg.geometry.validate();
    return cfg;
}

RunConfig parse_run_config(std::string_view json_text) {
    return parse_run_object(parse_json(json_text), "root");
}

SweepConfig parse_sweep_config(std::string_view json_text) {
    const json root = parse_json(json_text);
    reject_unknown(root, "root", {"base", "sweep_param", "values"});
    SweepConfig cfg;
    cfg.base = parse_run_object(required(root, "root", "base"), "base");
    const json &param = required(root, "root", "sweep_param");
    if (!param.is_string()) {
        fail("sweep_param", "expected a string");
    }
    cfg.param = parse_sweep_param(param.get<std::string>());
    const json &values = required(root, "root", "values");
    if (!values.is_array() || values.empty()) {
        fail("values", "expected a non-empty array");
    }
    for (const auto &v : values) {
        cfg.values.push_back(number(v, "values"));
    }
    if (cfg.param == SweepParam::overlap || cfg.param == SweepParam::phase) {
        (void)cfg.base.require_detector();
    }
    for (double v : cfg.values) {
        (void)cfg.at(v);
    }
    return cfg;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        detail::fail_validation("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace whichway::cli
