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
#include "whichway/interferometer.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "whichway/errors.hpp"

namespace whichway {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct RawPattern {
    std::vector<double> intensity;
    std::vector<double> branch1;
    std::vector<double> branch2;
    std::vector<double> interference;

    explicit RawPattern(std::size_t n)
        : intensity(n), branch1(n), branch2(n), interference(n) {}

    kernels::PatternOut out() {
        return {intensity, branch1, branch2, interference};
    }
};

void require_resolved(const ScreenGrid &grid, const Geometry &geom) {
    const double w = fringe_width(geom);
    WW_REQUIRE(grid.spacing() <= w / 8.0,
               "grid spacing " + std::to_string(grid.spacing()) +
                   " m cannot resolve fringes of width " + std::to_string(w) +
                   " m (need spacing <= w/8)");
}

void check_and_clamp(std::vector<double> &v, const char *what) {
    for (double &value : v) {
        if (!std::isfinite(value)) {
            detail::fail_numeric(std::string("non-finite ") + what);
        }
        if (value < 0.0) {
            if (value < -kClampWindow) {
                detail::fail_numeric(std::string("negative ") + what + " " +
                                     std::to_string(value) +
                                     " outside the rounding window");
            }
            value = 0.0;
        }
    }
}

void check_finite(const std::vector<double> &v, const char *what) {
    for (double value : v) {
        if (!std::isfinite(value)) {
            detail::fail_numeric(std::string("non-finite ") + what);
        }
    }
}

void validate_raw(RawPattern &raw) {
    check_and_clamp(raw.intensity, "intensity");
    check_and_clamp(raw.branch1, "branch intensity");
    check_and_clamp(raw.branch2, "branch intensity");
    check_finite(raw.interference, "interference term");
}

double checked_norm(const RawPattern &raw, double spacing) {
    const double norm = trapezoid(raw.intensity, spacing);
    if (!std::isfinite(norm) || norm <= 0.0) {
        detail::fail_numeric("pattern integral is zero or non-finite; the grid "
                             "does not cover the illuminated region");
    }
    return norm;
}

PatternSamples finish(const ScreenGrid &grid, std::vector<double> x,
                      RawPattern raw, double norm, Provenance provenance) {
    const double inv = 1.0 / norm;
    PatternSamples p;
    p.grid = grid;
    p.x = std::move(x);
    p.norm_constant = norm;
    p.provenance = provenance;
    const std::size_t n = raw.intensity.size();
    p.envelope.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        raw.intensity[i] *= inv;
        raw.branch1[i] *= inv;
        raw.branch2[i] *= inv;
        raw.interference[i] *= inv;
        p.envelope[i] = raw.branch1[i] + raw.branch2[i];
    }
    p.intensity = std::move(raw.intensity);
    p.branches = {std::move(raw.branch1), std::move(raw.branch2)};
    p.interference = std::move(raw.interference);
    return p;
}

kernels::DirectParams base_direct_params(const Geometry &geom) {
    const double eps = geom.packet_width;
    const double tau = effective_tau(geom);
    const Complex z = 1.0 / Complex{4.0 * eps * eps, 2.0 * tau};
    kernels::DirectParams p{};
    p.half_sep = geom.slit_sep / 2.0;
    p.alpha = z.real();
    p.beta = -z.imag();
    p.amplitude = std::numbers::sqrt2 * std::abs(spread_prefactor(eps, tau));
    return p;
}

RawPattern run_direct(const std::vector<double> &x,
                      const kernels::DirectParams &p) {
    RawPattern raw(x.size());
    kernels::active_kernels().direct(x, p, raw.out());
    return raw;
}

} // namespace

JointState::JointState(const Geometry &geom, const DetectorPair &pair,
                       const std::array<Complex, 2> &path_amps)
    : geom_(geom), pair_(pair),
      amps_{checked_amplitude(path_amps[0]), checked_amplitude(path_amps[1])} {
    geom_.validate();
    const double n = std::norm(amps_[0]) + std::norm(amps_[1]);
    WW_REQUIRE(std::abs(n - 1.0) <= kNormTolerance,
               "path amplitudes must satisfy |a1|^2 + |a2|^2 = 1");
}

JointState JointState::symmetric(const Geometry &geom, const DetectorPair &pair) {
    const Complex a{std::numbers::sqrt2 / 2.0, 0.0};
    return {geom, pair, {a, a}};
}

bool JointState::has_equal_paths() const noexcept {
    return std::abs(amps_[0] - amps_[1]) <= kNormTolerance;
}

void ScreenGrid::validate() const {
    WW_REQUIRE(std::isfinite(x_min) && std::isfinite(x_max) && x_min < x_max,
               "grid requires finite x_min < x_max");
    WW_REQUIRE(n_points >= 2, "grid requires at least 2 points");
}

std::vector<double> ScreenGrid::positions() const {
    validate();
    std::vector<double> x(n_points);
    const double h = spacing();
    for (std::size_t i = 0; i < n_points; ++i) {
        x[i] = x_min + static_cast<double>(i) * h;
    }
    x.back() = x_max;
    return x;
}

ScreenGrid ScreenGrid::default_for(const Geometry &geom) {
    const double w = fringe_width(geom);
    return {-5.0 * w, 5.0 * w, 8192};
}

kernels::DirectParams direct_params(const JointState &js) {
    kernels::DirectParams p = base_direct_params(js.geometry());
    const auto &d1 = js.pair().d1();
    const auto &d2 = js.pair().d2();
    const auto &a = js.path_amps();
    p.channels = 2;
    p.weights[0] = {a[0] * d1.c1(), a[1] * d2.c1()};
    p.weights[1] = {a[0] * d1.c2(), a[1] * d2.c2()};
    return p;
}

kernels::DirectParams conditional_params(const JointState &js,
                                         const DetectorState &b) {
    kernels::DirectParams p = base_direct_params(js.geometry());
    const auto &a = js.path_amps();
    p.channels = 1;
    p.weights[0] = {a[0] * inner_product(b, js.pair().d1()),
                    a[1] * inner_product(b, js.pair().d2())};
    p.weights[1] = {Complex{}, Complex{}};
    return p;
}

kernels::ClosedFormParams closed_form_params(const JointState &js) {
    WW_REQUIRE(js.has_equal_paths(),
               "closed form only applies to equal path amplitudes");
    const Geometry &g = js.geometry();
    const double eps = g.packet_width;
    const double tau = effective_tau(g);
    const double sigma = spread_sigma(eps, tau);
    const double sigma2 = sigma * sigma;
    const double eps4 = eps * eps * eps * eps;
    kernels::ClosedFormParams p{};
    p.half_sep = g.slit_sep / 2.0;
    p.inv_two_sigma2 = 1.0 / (2.0 * sigma2);
    p.cosh_rate = g.slit_sep / (2.0 * sigma2);
    p.wavenumber = g.slit_sep * tau / (4.0 * eps4 + tau * tau);
    // arg <d1|d2> = -theta
    p.phase = -js.pair().phase();
    p.overlap = js.pair().overlap();
    // |A_t|^2 = 1 / (2 sqrt(2 pi) sigma_t)
    p.branch_scale = 1.0 / (2.0 * std::sqrt(kTwoPi) * sigma);
    return p;
}

double intensity_direct(double x, const JointState &js) {
    const auto p = direct_params(js);
    double intensity = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double cross = 0.0;
    const double xs[1] = {x};
    kernels::scalar::direct(xs, p, {{&intensity, 1}, {&b1, 1}, {&b2, 1}, {&cross, 1}});
    return intensity;
}

double intensity_closed_form(double x, const JointState &js) {
    const auto p = closed_form_params(js);
    double intensity = 0.0;
    double b1 = 0.0;
    double b2 = 0.0;
    double cross = 0.0;
    const double xs[1] = {x};
    kernels::scalar::closed_form(xs, p,
                                 {{&intensity, 1}, {&b1, 1}, {&b2, 1}, {&cross, 1}});
    return intensity;
}

double fringe_width(const Geometry &geom) {
    geom.validate();
    const double lam = geom.lambda_d;
    const double d = geom.slit_sep;
    const double L = geom.screen_dist;
    const double eps2 = geom.packet_width * geom.packet_width;
    return lam * L / d + 16.0 * std::numbers::pi * std::numbers::pi * eps2 *
                             eps2 / (lam * d * L);
}

PatternSamples pattern_on_grid(const ScreenGrid &grid, const JointState &js,
                               IntensityMode mode) {
    grid.validate();
    if (js.pair().overlap() > 0.0) {
        require_resolved(grid, js.geometry());
    }
    std::vector<double> x = grid.positions();
    RawPattern raw(x.size());
    Provenance prov = Provenance::direct;
    if (mode == IntensityMode::direct) {
        raw = run_direct(x, direct_params(js));
    } else {
        kernels::active_kernels().closed_form(x, closed_form_params(js), raw.out());
        prov = Provenance::closed_form;
    }
    validate_raw(raw);
    const double norm = checked_norm(raw, grid.spacing());
    return finish(grid, std::move(x), std::move(raw), norm, prov);
}

EraserResult conditional_patterns(const ScreenGrid &grid, const JointState &js,
                                  const MeasurementBasis &basis) {
    grid.validate();
    const auto p_b = conditional_params(js, basis.b1());
    const auto p_perp = conditional_params(js, basis.b2());
    const auto cross = [](const kernels::DirectParams &p) {
        return std::conj(p.weights[0][0]) * p.weights[0][1];
    };
    if (std::abs(cross(p_b)) > 0.0 || std::abs(cross(p_perp)) > 0.0) {
        require_resolved(grid, js.geometry());
    }

    const std::vector<double> x = grid.positions();
    RawPattern raw_b = run_direct(x, p_b);
    RawPattern raw_perp = run_direct(x, p_perp);
    validate_raw(raw_b);
    validate_raw(raw_perp);

    RawPattern raw_sum(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        raw_sum.intensity[i] = raw_b.intensity[i] + raw_perp.intensity[i];
        raw_sum.branch1[i] = raw_b.branch1[i] + raw_perp.branch1[i];
        raw_sum.branch2[i] = raw_b.branch2[i] + raw_perp.branch2[i];
        raw_sum.interference[i] = raw_b.interference[i] + raw_perp.interference[i];
    }
    const double norm = checked_norm(raw_sum, grid.spacing());

    EraserResult result{
        finish(grid, x, std::move(raw_b), norm, Provenance::conditional),
        finish(grid, x, std::move(raw_perp), norm, Provenance::conditional),
        finish(grid, x, std::move(raw_sum), norm, Provenance::conditional),
        {0.0, 0.0}};
    result.branch_weights = {trapezoid(result.i_b.intensity, grid.spacing()),
                             trapezoid(result.i_b_perp.intensity, grid.spacing())};
    return result;
}

double trapezoid(const std::vector<double> &y, double spacing) noexcept {
    if (y.size() < 2) {
        return 0.0;
    }
    double acc = 0.5 * (y.front() + y.back());
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        acc += y[i];
    }
    return acc * spacing;
}

} // namespace whichway
