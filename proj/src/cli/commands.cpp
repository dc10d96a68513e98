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
#include "whichway/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>

#include "CLI11.hpp"
#include "whichway/errors.hpp"
#include "whichway/metrics.hpp"
#include "whichway/qubit.hpp"

namespace whichway::cli {

namespace {

JointState symmetric_state(const RunConfig &cfg) {
    const DetectorConfig &det = cfg.require_detector();
    return JointState::symmetric(cfg.geometry, make_detector_pair(det.overlap, det.phase));
}

void warn_geometry(const Geometry &g, std::ostream &err) {
    if (g.overlapping_packets()) {
        err << "warning: slit_sep <= 4 * packet_width; the packets already "
               "overlap at the slits\n";
    }
}

struct Destination {
    std::string path; // empty: the `out` stream
    Format format;
};

Destination destination(const std::string &flag_path, const std::string &flag_format,
                        const OutputConfig &cfg, Format fallback) {
    Destination d{flag_path, fallback};
    if (d.path.empty() && cfg.path) {
        d.path = *cfg.path;
    }
    if (!flag_format.empty()) {
        d.format = parse_format(flag_format);
    } else if (cfg.format) {
        d.format = *cfg.format;
    }
    return d;
}

void emit(const Destination &dst, const std::string &body, std::ostream &out) {
    if (dst.path.empty()) {
        out << body;
        return;
    }
    std::ofstream f(dst.path, std::ios::binary | std::ios::trunc);
    if (!f) {
        detail::fail_validation("cannot open output file '" + dst.path + "'");
    }
    f << body;
    if (!f.flush()) {
        detail::fail_validation("failed writing output file '" + dst.path + "'");
    }
}

struct CommonFlags {
    std::string config;
    std::string out;
    std::string format;
};

void add_common(CLI::App *cmd, CommonFlags &flags, bool needs_config) {
    auto *opt = cmd->add_option("--config", flags.config, "JSON configuration file");
    if (needs_config) {
        opt->required();
    }
    cmd->add_option("--out", flags.out, "Output file (default: stdout)");
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

} // namespace

Table pattern_table(const RunConfig &cfg, IntensityMode mode) {
    const PatternSamples p = pattern_on_grid(cfg.grid_or_default(), symmetric_state(cfg), mode);
    Table t{{"x_m", "intensity", "envelope", "interference_term"}, {}};
    t.rows.reserve(p.x.size());
    for (std::size_t i = 0; i < p.x.size(); ++i) {
        t.rows.push_back({p.x[i], p.intensity[i], p.envelope[i], p.interference[i]});
    }
    return t;
}

Table scan_duality_table(const SweepConfig &cfg) {
    Table t{{"s", "D", "V_bound", "V_numeric", "dP2", "dQ2", "lhs", "rhs_unc",
             "egy_ok", "unc_ok"},
            {}};
    for (double v : cfg.values) {
        const RunConfig run = cfg.at(v);
        const DetectorConfig &det = run.require_detector();
        const DetectorPair pair = make_detector_pair(det.overlap, det.phase);
        const DualityReport r = duality_report(run.geometry, pair, run.grid_or_default());
        t.rows.push_back({pair.overlap(), r.D, r.V_bound, r.V_numeric, r.dP2, r.dQ2,
                          r.lhs, r.rhs_unc, r.egy_ok, r.unc_ok});
    }
    return t;
}

Table eraser_table(const RunConfig &cfg) {
    if (!cfg.eraser.enabled) {
        detail::fail_validation("config: eraser: set \"enabled\": true to run the eraser");
    }
    const EraserResult er = conditional_patterns(
        cfg.grid_or_default(), symmetric_state(cfg), rotated_basis(cfg.eraser.basis_angle));
    Table t{{"x_m", "i_q1", "i_q2", "i_sum"}, {}};
    t.rows.reserve(er.i_sum.x.size());
    for (std::size_t i = 0; i < er.i_sum.x.size(); ++i) {
        t.rows.push_back({er.i_sum.x[i], er.i_b.intensity[i], er.i_b_perp.intensity[i],
                          er.i_sum.intensity[i]});
    }
    return t;
}

std::vector<std::array<double, 3>> fibonacci_sphere(std::size_t samples) {
    WW_REQUIRE(samples >= 1, "samples must be >= 1");
    std::vector<std::array<double, 3>> pts;
    pts.reserve(samples);
    if (samples == 1) {
        pts.push_back({0.0, 0.0, 1.0});
        return pts;
    }
    const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
    const double last = static_cast<double>(samples - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        const double z = 1.0 - 2.0 * static_cast<double>(i) / last;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        // + 0.0 keeps the poles free of negative zeros.
        pts.push_back({r * std::cos(phi) + 0.0, r * std::sin(phi) + 0.0, z});
    }
    return pts;
}

Table uncertainty_table(std::size_t samples) {
    Table t{{"n1", "n2", "n3", "var_sigma2", "var_sigma3", "sum"}, {}};
    double min_sum = std::numeric_limits<double>::infinity();
    for (const auto &n : fibonacci_sphere(samples)) {
        const SumUncertainty u = sum_uncertainty(DetectorState::from_bloch(n));
        t.rows.push_back({n[0], n[1], n[2], u.var_sigma2, u.var_sigma3, u.sum});
        min_sum = std::min(min_sum, u.sum);
    }
    t.rows.push_back({std::string("min"), Empty{}, Empty{}, Empty{}, Empty{}, min_sum});
    return t;
}

Table bohr_table(const RunConfig &cfg) {
    const BohrReport r = bohr_analysis(cfg.geometry);
    return {{"delta_px", "delta_x", "fringe_sep", "ratio"},
            {{r.delta_px, r.delta_x, r.fringe_sep, r.ratio}}};
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Which-way double-slit simulator", "whichway"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string mode = "direct";
    std::size_t samples = 10000;

    auto *pattern = app.add_subcommand("pattern", "Screen intensity on a grid");
    add_common(pattern, flags, true);
    pattern->add_option("--mode", mode, "Intensity evaluation")
        ->check(CLI::IsMember({"direct", "closed-form"}));

    auto *scan = app.add_subcommand("scan-duality", "Duality report across a parameter sweep");
    add_common(scan, flags, true);

    auto *eraser = app.add_subcommand("eraser", "Patterns conditioned on a detector basis");
    add_common(eraser, flags, true);

    auto *unc = app.add_subcommand("uncertainty-scan",
                                   "Sum uncertainty over a Bloch-sphere lattice");
    add_common(unc, flags, false);
    unc->add_option("--samples", samples, "Number of lattice points")
        ->check(CLI::PositiveNumber);

    auto *bohr = app.add_subcommand("bohr", "Bohr's recoil estimate");
    add_common(bohr, flags, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitConfig;
    }

    try {
        if (*unc) {
            OutputConfig none;
            if (!flags.config.empty()) {
                none = parse_run_config(read_file(flags.config)).output;
            }
            const Destination dst = destination(flags.out, flags.format, none, Format::csv);
            emit(dst, render(uncertainty_table(samples), dst.format), out);
            return kExitOk;
        }
        if (*scan) {
            const SweepConfig cfg = parse_sweep_config(read_file(flags.config));
            const Destination dst =
                destination(flags.out, flags.format, cfg.base.output, Format::csv);
            warn_geometry(cfg.base.geometry, err);
            emit(dst, render(scan_duality_table(cfg), dst.format), out);
            return kExitOk;
        }

        const RunConfig cfg = parse_run_config(read_file(flags.config));
        if (*bohr) {
            const Destination dst = destination(flags.out, flags.format, cfg.output, Format::json);
            const Table t = bohr_table(cfg);
            if (dst.format == Format::json) {
                std::vector<std::pair<std::string, Cell>> fields;
                for (std::size_t i = 0; i < t.columns.size(); ++i) {
                    fields.emplace_back(t.columns[i], t.rows[0][i]);
                }
                emit(dst, to_json_object(fields), out);
            } else {
                emit(dst, to_csv(t), out);
            }
            return kExitOk;
        }

        const Destination dst = destination(flags.out, flags.format, cfg.output, Format::csv);
        warn_geometry(cfg.geometry, err);
        if (*pattern) {
            const IntensityMode m =
                mode == "closed-form" ? IntensityMode::closed_form : IntensityMode::direct;
            emit(dst, render(pattern_table(cfg, m), dst.format), out);
        } else {
            emit(dst, render(eraser_table(cfg), dst.format), out);
        }
        return kExitOk;
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const NumericError &e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << '\n';
        return kExitNumeric;
    }
}

} // namespace whichway::cli
