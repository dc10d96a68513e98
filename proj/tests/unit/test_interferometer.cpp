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
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "whichway/errors.hpp"
#include "whichway/interferometer.hpp"
#include "whichway/metrics.hpp"

using namespace whichway;

namespace {

constexpr double kW = 0.005000031582734083; // fringe width, standard geometry

// Textbook evaluation of sum_m |sum_i a_i <m|d_i> G_i(x)|^2 straight from the
// packet amplitudes, G = sqrt(2) * evolved_amplitude.
double oracle_intensity(double x, const JointState &js) {
    const Geometry &g = js.geometry();
    const double tau = effective_tau(g);
    const double h = g.slit_sep / 2.0;
    const Complex g1 = std::numbers::sqrt2 * evolved_amplitude(x, h, g.packet_width, tau);
    const Complex g2 = std::numbers::sqrt2 * evolved_amplitude(x, -h, g.packet_width, tau);
    const auto &a = js.path_amps();
    const auto &d1 = js.pair().d1();
    const auto &d2 = js.pair().d2();
    const Complex m1 = a[0] * d1.c1() * g1 + a[1] * d2.c1() * g2;
    const Complex m2 = a[0] * d1.c2() * g1 + a[1] * d2.c2() * g2;
    return std::norm(m1) + std::norm(m2);
}

double trapezoid_ref(const std::vector<double> &y, double h) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < y.size(); ++i) {
        acc += 0.5 * (y[i] + y[i + 1]) * h;
    }
    return acc;
}

JointState standard(double s, double theta) {
    return JointState::symmetric(kStandardGeometry, make_detector_pair(s, theta));
}

} // namespace

TEST_SUITE("interferometer") {

TEST_CASE("joint state validation") {
    const DetectorPair pair = make_detector_pair(0.5, 0.0);
    CHECK_THROWS_AS(JointState(kStandardGeometry, pair, {Complex{1.0}, Complex{1.0}}),
                    ValidationError);
    Geometry bad = kStandardGeometry;
    bad.lambda_d = -1.0;
    CHECK_THROWS_AS(JointState::symmetric(bad, pair), ValidationError);
    CHECK(JointState::symmetric(kStandardGeometry, pair).has_equal_paths());
    const JointState skew(kStandardGeometry, pair, {Complex{0.6}, Complex{0.8}});
    CHECK_FALSE(skew.has_equal_paths());
    CHECK_THROWS_AS(intensity_closed_form(0.0, skew), ValidationError);
    CHECK_NOTHROW(intensity_direct(0.0, skew));
}

TEST_CASE("fringe width") {
    CHECK(fringe_width(kStandardGeometry) == doctest::Approx(kW).epsilon(1e-14));
    Geometry g = kStandardGeometry;
    g.packet_width = 1e-12;
    CHECK(fringe_width(g) == doctest::Approx(g.lambda_d * g.screen_dist / g.slit_sep).epsilon(1e-15));
    double previous = 0.0;
    for (double eps : {1e-7, 1e-6, 1e-5, 2e-5, 5e-5}) {
        g.packet_width = eps;
        CHECK(fringe_width(g) > previous);
        previous = fringe_width(g);
    }
}

TEST_CASE("direct intensity matches the textbook amplitude sum") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    std::uniform_real_distribution<double> ut(-std::numbers::pi, std::numbers::pi);
    std::uniform_real_distribution<double> ux(-0.02, 0.02);
    for (int i = 0; i < 200; ++i) {
        const double a1 = us(rng);
        const JointState js(kStandardGeometry, make_detector_pair(us(rng), ut(rng)),
                            {Complex{std::sqrt(a1)},
                             std::polar(std::sqrt(1.0 - a1), ut(rng))});
        const double x = ux(rng);
        const double ref = oracle_intensity(x, js);
        CHECK(intensity_direct(x, js) == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("orthogonal detector states add the humps incoherently") {
    const JointState js = standard(0.0, 0.0);
    const double tau = effective_tau(kStandardGeometry);
    const double h = kStandardGeometry.slit_sep / 2.0;
    for (double x : {0.0, 1e-3, -4e-3}) {
        const double humps = std::norm(evolved_amplitude(x, h, 1e-5, tau)) +
                             std::norm(evolved_amplitude(x, -h, 1e-5, tau));
        CHECK(intensity_direct(x, js) == doctest::Approx(humps).epsilon(1e-14));
    }
}

TEST_CASE("identical detector states are fully constructive at the center") {
    const JointState js = standard(1.0, 0.0);
    const double tau = effective_tau(kStandardGeometry);
    const double g = std::norm(evolved_amplitude(0.0, 5e-5, 1e-5, tau));
    CHECK(intensity_direct(0.0, js) == doctest::Approx(4.0 * g).epsilon(1e-14));
}

TEST_CASE("closed form agrees with direct evaluation") {
    CHECK(intensity_direct(0.0, standard(0.6, 0.0)) ==
          doctest::Approx(intensity_closed_form(0.0, standard(0.6, 0.0))).epsilon(1e-12));

    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    std::uniform_real_distribution<double> ut(-std::numbers::pi, std::numbers::pi);
    const Geometry geoms[] = {kStandardGeometry, {5e-7, 4e-5, 1.0, 1e-5}, {1e-9, 1e-6, 0.1, 2e-8}};
    for (const Geometry &g : geoms) {
        const ScreenGrid grid = ScreenGrid::default_for(g);
        const auto x = grid.positions();
        for (int t = 0; t < 5; ++t) {
            const JointState js = JointState::symmetric(g, make_detector_pair(us(rng), ut(rng)));
            double worst = 0.0;
            for (double xi : x) {
                const double d = intensity_direct(xi, js);
                if (d > 1e-300) {
                    worst = std::max(worst, std::abs(d - intensity_closed_form(xi, js)) / d);
                }
            }
            CHECK(worst <= 1e-10);
        }
    }
}

TEST_CASE("zero overlap closed form is the bare envelope") {
    const JointState js = standard(0.0, 1.3);
    const auto ctx = propagation_context(kStandardGeometry);
    const double s2 = ctx.sigma_t * ctx.sigma_t;
    const double at2 = 1.0 / (2.0 * std::sqrt(2.0 * std::numbers::pi) * ctx.sigma_t);
    for (double x : {-7e-3, 0.0, 2e-3}) {
        const double env = 2.0 * at2 * std::exp(-(x * x + 2.5e-9) / (2 * s2)) *
                           std::cosh(x * 1e-4 / (2 * s2));
        CHECK(intensity_closed_form(x, js) == doctest::Approx(env).epsilon(1e-13));
    }
}

TEST_CASE("phase flip at the center") {
    const double constructive = intensity_closed_form(0.0, standard(0.7, 0.0));
    const double destructive = intensity_closed_form(0.0, standard(0.7, std::numbers::pi));
    const double envelope = intensity_closed_form(0.0, standard(0.0, 0.0));
    CHECK(destructive < envelope);
    CHECK(envelope < constructive);
}

TEST_CASE("center cross term is s cos(theta) times the envelope") {
    const double s = 0.8;
    for (double theta : {0.0, std::numbers::pi / 2, std::numbers::pi}) {
        const auto p = direct_params(standard(s, theta));
        double i = 0, b1 = 0, b2 = 0, cross = 0;
        const double x0[1] = {0.0};
        kernels::scalar::direct(x0, p, {{&i, 1}, {&b1, 1}, {&b2, 1}, {&cross, 1}});
        CHECK(cross == doctest::Approx(s * std::cos(theta) * (b1 + b2)).epsilon(1e-12).scale(b1));
    }
}

TEST_CASE("mirror symmetry for theta = 0") {
    const JointState js = standard(0.45, 0.0);
    for (double x : {1e-4, 2.2e-3, 9e-3, 2e-2}) {
        CHECK(intensity_direct(x, js) == doctest::Approx(intensity_direct(-x, js)).epsilon(1e-12));
    }
}

TEST_CASE("pattern normalization and drift") {
    const Geometry close{5e-7, 4e-5, 1.0, 1e-5};
    for (double s : {0.0, 0.5, 1.0}) {
        for (double theta : {0.0, 2.0}) {
            const JointState js = JointState::symmetric(close, make_detector_pair(s, theta));
            const ScreenGrid grid = ScreenGrid::default_for(close);
            const PatternSamples p = pattern_on_grid(grid, js, IntensityMode::direct);
            CHECK(trapezoid_ref(p.intensity, grid.spacing()) == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(std::isfinite(p.norm_constant));
            CHECK(p.norm_constant > 0.0);
            const double overlap_term = std::exp(-close.slit_sep * close.slit_sep /
                                                 (8 * close.packet_width * close.packet_width));
            CHECK(std::abs(p.norm_constant - 1.0) <= overlap_term + 1e-9);
            CHECK(p.norm_constant - 1.0 ==
                  doctest::Approx(s * std::cos(theta) * overlap_term).epsilon(1e-9).scale(1.0));
            for (double v : p.intensity) {
                CHECK(v >= 0.0);
            }
            CHECK(p.provenance == Provenance::direct);
        }
    }
}

TEST_CASE("closed-form pattern carries its provenance") {
    const PatternSamples p = pattern_on_grid(ScreenGrid::default_for(kStandardGeometry),
                                             standard(0.3, 0.1), IntensityMode::closed_form);
    CHECK(p.provenance == Provenance::closed_form);
    CHECK(trapezoid(p.intensity, p.grid.spacing()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("grid guard") {
    const ScreenGrid coarse{-0.05, 0.05, 100};
    CHECK_THROWS_AS(pattern_on_grid(coarse, standard(0.1, 0.0), IntensityMode::direct),
                    ValidationError);
    CHECK_NOTHROW(pattern_on_grid(coarse, standard(0.0, 0.0), IntensityMode::direct));
    const ScreenGrid ok{-0.05, 0.05, 161};
    CHECK(ok.spacing() <= kW / 8);
    CHECK_NOTHROW(pattern_on_grid(ok, standard(0.1, 0.0), IntensityMode::direct));

    CHECK_THROWS_AS(ScreenGrid({0.1, 0.0, 10}).validate(), ValidationError);
    CHECK_THROWS_AS(ScreenGrid({0.0, 0.1, 1}).validate(), ValidationError);
}

TEST_CASE("grid far from the packets is a numeric failure") {
    const ScreenGrid far{1000.0, 1000.01, 64};
    CHECK_THROWS_AS(pattern_on_grid(far, standard(0.5, 0.0), IntensityMode::direct),
                    NumericError);
}

TEST_CASE("default grid") {
    const ScreenGrid g = ScreenGrid::default_for(kStandardGeometry);
    CHECK(g.n_points == 8192);
    CHECK(g.x_min == doctest::Approx(-5 * kW).epsilon(1e-14));
    CHECK(g.x_max == doctest::Approx(5 * kW).epsilon(1e-14));
    const auto x = g.positions();
    CHECK(x.front() == g.x_min);
    CHECK(x.back() == g.x_max);
}

TEST_CASE("zero overlap gives a smooth single-humped pattern") {
    const ScreenGrid grid{-2.5e-2, 2.5e-2, 20001};
    const PatternSamples p = pattern_on_grid(grid, standard(0.0, 0.0), IntensityMode::direct);
    CHECK(local_minima(p.intensity).empty());
    for (double v : p.interference) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("eraser branches complete the unconditioned pattern") {
    const ScreenGrid grid = ScreenGrid::default_for(kStandardGeometry);
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    std::uniform_real_distribution<double> ut(-std::numbers::pi, std::numbers::pi);
    for (int t = 0; t < 6; ++t) {
        const double a1 = us(rng);
        const JointState js(kStandardGeometry, make_detector_pair(us(rng), ut(rng)),
                            {Complex{std::sqrt(a1)}, std::polar(std::sqrt(1 - a1), ut(rng))});
        const EraserResult er = conditional_patterns(grid, js, rotated_basis(ut(rng)));
        const PatternSamples whole = pattern_on_grid(grid, js, IntensityMode::direct);
        for (std::size_t i = 0; i < whole.x.size(); ++i) {
            const double sum = er.i_b.intensity[i] + er.i_b_perp.intensity[i];
            CHECK(std::abs(sum - whole.intensity[i]) <= 1e-12 * whole.intensity[i] + 1e-300);
            CHECK(std::abs(er.i_sum.intensity[i] - whole.intensity[i]) <=
                  1e-12 * whole.intensity[i] + 1e-300);
        }
        CHECK(er.branch_weights[0] + er.branch_weights[1] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(er.i_b.provenance == Provenance::conditional);
    }
}

TEST_CASE("symmetric eraser with the Q basis") {
    const ScreenGrid grid = ScreenGrid::default_for(kStandardGeometry);
    const EraserResult er = conditional_patterns(grid, standard(0.0, 0.0), mub_basis());
    CHECK(oscillatory_residual(er.i_sum) < 1e-12);
    CHECK(oscillatory_residual(er.i_b) > 0.4);
    CHECK(oscillatory_residual(er.i_b_perp) > 0.4);
    // fringe at the center for q1, antifringe for q2
    const std::size_t mid = grid.n_points / 2;
    CHECK(er.i_b.intensity[mid] > er.i_b.envelope[mid]);
    CHECK(er.i_b_perp.intensity[mid] < er.i_b_perp.envelope[mid]);
    const double tail = std::exp(-12.5); // packet overlap at the slits
    CHECK(er.branch_weights[0] == doctest::Approx(0.5).epsilon(tail));
    CHECK(er.branch_weights[1] == doctest::Approx(0.5).epsilon(tail));
}

TEST_CASE("which-way basis conditioning leaves single-slit humps") {
    const ScreenGrid grid = ScreenGrid::default_for(kStandardGeometry);
    const EraserResult er = conditional_patterns(grid, standard(0.0, 0.0), which_way_basis());
    CHECK(oscillatory_residual(er.i_b) < 1e-15);
    CHECK(oscillatory_residual(er.i_b_perp) < 1e-15);
    // each branch holds one packet
    CHECK(trapezoid(er.i_b.branches[1], grid.spacing()) == 0.0);
    CHECK(trapezoid(er.i_b_perp.branches[0], grid.spacing()) == 0.0);
}

TEST_CASE("conditioning on a coarse grid still needs resolved fringes") {
    const ScreenGrid coarse{-0.05, 0.05, 100};
    CHECK_THROWS_AS(conditional_patterns(coarse, standard(0.0, 0.0), mub_basis()),
                    ValidationError);
    CHECK_NOTHROW(conditional_patterns(coarse, standard(0.0, 0.0), which_way_basis()));
}

} // TEST_SUITE
