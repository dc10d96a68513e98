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
#include "whichway/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "whichway/errors.hpp"

namespace whichway {

namespace {

// Envelope samples this far below the peak carry no usable ratio.
constexpr double kEnvelopeFloor = 1e-200;

std::size_t argmax(const std::vector<double> &y) {
    return static_cast<std::size_t>(std::max_element(y.begin(), y.end()) - y.begin());
}

std::size_t nearest(const std::vector<std::size_t> &candidates, double target,
                    const std::vector<double> &x) {
    std::size_t best = candidates.front();
    double best_dist = std::abs(x[best] - target);
    for (std::size_t c : candidates) {
        const double dist = std::abs(x[c] - target);
        if (dist < best_dist) {
            best = c;
            best_dist = dist;
        }
    }
    return best;
}

// Walks downhill from a maximum to the first local minimum in `step`
// direction. Returns false if the walk runs off the grid.
bool descend(const std::vector<double> &y, std::size_t from, int step,
             std::size_t &out) {
    std::size_t i = from;
    while (true) {
        if ((step < 0 && i == 0) || (step > 0 && i + 1 >= y.size())) {
            return false;
        }
        const std::size_t next = step < 0 ? i - 1 : i + 1;
        if (y[next] > y[i]) {
            out = i;
            return i != from;
        }
        i = next;
    }
}

double contrast_around(const std::vector<double> &x, const std::vector<double> &n,
                       std::size_t i_max) {
    std::size_t i_left = 0;
    std::size_t i_right = 0;
    if (!descend(n, i_max, -1, i_left) || !descend(n, i_max, +1, i_right)) {
        detail::fail_numeric("fringe maximum has no flanking minima on the grid");
    }
    const double top = refine_extremum(x, n, i_max).value;
    double bottom = 0.5 * (refine_extremum(x, n, i_left).value +
                           refine_extremum(x, n, i_right).value);
    bottom = std::max(bottom, 0.0);
    if (!(top > 0.0)) {
        detail::fail_numeric("non-positive fringe maximum");
    }
    return std::clamp((top - bottom) / (top + bottom), 0.0, 1.0);
}

double visibility_near(const PatternSamples &pattern, double x_ref) {
    if (oscillatory_residual(pattern) < kFlatnessThreshold) {
        return 0.0;
    }
    const std::vector<double> n = normalized_fringe(pattern);
    const auto maxima = local_maxima(n);
    if (maxima.empty()) {
        detail::fail_numeric("no fringe maxima found in a non-flat pattern");
    }
    return contrast_around(pattern.x, n, nearest(maxima, x_ref, pattern.x));
}

} // namespace

double distinguishability(const DetectorPair &pair) noexcept {
    const double s = pair.overlap();
    return std::sqrt(std::max(0.0, 1.0 - s * s));
}

double visibility_bound(const DetectorPair &pair) noexcept {
    return pair.overlap();
}

double local_visibility(double x, const Geometry &geom, const DetectorPair &pair) {
    const auto ctx = propagation_context(geom);
    const double arg = x * geom.slit_sep / (2.0 * ctx.sigma_t * ctx.sigma_t);
    return pair.overlap() / std::cosh(arg);
}

Extremum refine_extremum(const std::vector<double> &x,
                         const std::vector<double> &y, std::size_t i) {
    if (i == 0 || i + 1 >= y.size()) {
        return {i, x[i], y[i]};
    }
    const double y0 = y[i - 1];
    const double y1 = y[i];
    const double y2 = y[i + 1];
    const double curv = y0 - 2.0 * y1 + y2;
    if (curv == 0.0) {
        return {i, x[i], y1};
    }
    const double delta = 0.5 * (y0 - y2) / curv;
    const double h = x[i + 1] - x[i];
    return {i, x[i] + delta * h, y1 - 0.25 * (y0 - y2) * delta};
}

std::vector<std::size_t> local_maxima(const std::vector<double> &y) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (y[i - 1] <= y[i] && y[i] > y[i + 1]) {
            out.push_back(i);
        }
    }
    return out;
}

std::vector<std::size_t> local_minima(const std::vector<double> &y) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i + 1 < y.size(); ++i) {
        if (y[i - 1] >= y[i] && y[i] < y[i + 1]) {
            out.push_back(i);
        }
    }
    return out;
}

double oscillatory_residual(const PatternSamples &pattern) {
    double peak = 0.0;
    double resid = 0.0;
    for (std::size_t i = 0; i < pattern.intensity.size(); ++i) {
        peak = std::max(peak, pattern.intensity[i]);
        resid = std::max(resid, std::abs(pattern.intensity[i] - pattern.envelope[i]));
    }
    return peak > 0.0 ? resid / peak : 0.0;
}

std::vector<double> normalized_fringe(const PatternSamples &pattern) {
    const double env_peak =
        *std::max_element(pattern.envelope.begin(), pattern.envelope.end());
    std::vector<double> n(pattern.intensity.size(), 1.0);
    for (std::size_t i = 0; i < n.size(); ++i) {
        const double e = pattern.envelope[i];
        if (e > kEnvelopeFloor * env_peak) {
            n[i] = pattern.intensity[i] / e;
        }
    }
    return n;
}

std::vector<double> fringe_function(const PatternSamples &pattern) {
    std::vector<double> g(pattern.intensity.size(), 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double b = std::sqrt(pattern.branches[0][i]) *
                         std::sqrt(pattern.branches[1][i]);
        if (b > 0.0) {
            g[i] = pattern.interference[i] / (2.0 * b);
        }
    }
    return g;
}

double numeric_visibility(const PatternSamples &pattern) {
    WW_REQUIRE(pattern.intensity.size() >= 3, "pattern needs at least 3 samples");
    return visibility_near(pattern, pattern.x[argmax(pattern.intensity)]);
}

double numeric_visibility_at(const PatternSamples &pattern, double x_ref) {
    WW_REQUIRE(pattern.intensity.size() >= 3, "pattern needs at least 3 samples");
    return visibility_near(pattern, x_ref);
}

double measured_fringe_spacing(const PatternSamples &pattern) {
    const std::vector<double> g = fringe_function(pattern);
    const auto maxima = local_maxima(g);
    if (maxima.size() < 3) {
        detail::fail_numeric("fewer than three fringe maxima on the grid");
    }
    // The central fringe straddles the symmetry axis between the slits.
    const std::size_t c = nearest(maxima, 0.0, pattern.x);
    const auto it = std::find(maxima.begin(), maxima.end(), c);
    if (it == maxima.begin() || it + 1 == maxima.end()) {
        detail::fail_numeric("central fringe maximum has no neighbours on the grid");
    }
    const double left = refine_extremum(pattern.x, g, *(it - 1)).x;
    const double right = refine_extremum(pattern.x, g, *(it + 1)).x;
    return 0.5 * (right - left);
}

std::array<double, 2> eraser_branch_visibilities(const EraserResult &er) {
    return {numeric_visibility(er.i_b), numeric_visibility(er.i_b_perp)};
}

std::array<double, 2> mub_branch_weights(const JointState &js) {
    const MeasurementBasis q = mub_basis();
    const auto &a = js.path_amps();
    const DetectorState *d[2] = {&js.pair().d1(), &js.pair().d2()};
    std::array<double, 2> w{0.0, 0.0};
    for (int i = 0; i < 2; ++i) {
        w[0] += std::norm(a[i]) * std::norm(inner_product(q.b1(), *d[i]));
        w[1] += std::norm(a[i]) * std::norm(inner_product(q.b2(), *d[i]));
    }
    return w;
}

DualityReport duality_report(const Geometry &geom, const DetectorPair &pair,
                             const ScreenGrid &grid) {
    const JointState js = JointState::symmetric(geom, pair);
    const PatternSamples pattern = pattern_on_grid(grid, js, IntensityMode::direct);
    const auto weights = mub_branch_weights(js);
    const double imbalance = weights[0] - weights[1];

    DualityReport r{};
    r.D = distinguishability(pair);
    r.V_bound = visibility_bound(pair);
    r.V_numeric = numeric_visibility(pattern);
    r.dP2 = variance(pair.d1(), sigma3());
    r.dQ2 = std::clamp(1.0 - imbalance * imbalance, 0.0, 1.0);
    r.lhs = r.D * r.D + r.V_numeric * r.V_numeric;
    r.rhs_unc = 2.0 - (r.dP2 + r.dQ2);
    r.egy_ok = r.lhs <= 1.0 + kDualityTolerance;
    r.unc_ok = r.lhs <= r.rhs_unc + kDualityTolerance;
    return r;
}

BohrReport bohr_analysis(const Geometry &geom) {
    geom.validate();
    const double lam = geom.lambda_d;
    const double d = geom.slit_sep;
    const double L = geom.screen_dist;
    BohrReport r{};
    r.delta_px = (kPlanck / lam) * (d / L);
    r.delta_x = lam * L / (4.0 * std::numbers::pi * d);
    r.fringe_sep = lam * L / d;
    r.ratio = r.delta_x / r.fringe_sep;
    return r;
}

} // namespace whichway
