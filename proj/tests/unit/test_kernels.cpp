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
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"
#include "whichway/interferometer.hpp"
#include "whichway/kernels.hpp"

using namespace whichway;
using namespace whichway::kernels;

namespace {

struct Buffers {
    std::vector<double> intensity, branch1, branch2, interference;
    explicit Buffers(std::size_t n) : intensity(n), branch1(n), branch2(n), interference(n) {}
    PatternOut out() { return {intensity, branch1, branch2, interference}; }
};

std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return x;
}

// Worst per-point difference, measured against the non-oscillating part
// (the cross term can cross zero, so plain relative error is meaningless).
double worst_gap(const Buffers &a, const Buffers &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.intensity.size(); ++i) {
        const double scale = a.branch1[i] + a.branch2[i];
        if (scale < 1e-290) {
            continue;
        }
        const double diffs[] = {a.intensity[i] - b.intensity[i],
                                a.branch1[i] - b.branch1[i],
                                a.branch2[i] - b.branch2[i],
                                a.interference[i] - b.interference[i]};
        for (double d : diffs) {
            worst = std::max(worst, std::abs(d) / scale);
        }
    }
    return worst;
}

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar kernel set is always available") {
    CHECK(isa_available(Isa::scalar));
    CHECK(kernels_for(Isa::scalar).isa == Isa::scalar);
    CHECK(isa_name(Isa::scalar) == "scalar");
    CHECK(isa_name(Isa::avx2) == "avx2");
}

TEST_CASE("runtime selection can be forced and reset") {
    select_isa(Isa::scalar);
    CHECK(active_kernels().isa == Isa::scalar);
    reset_isa();
    CHECK(active_kernels().isa == (isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar));
    if (!isa_available(Isa::avx2)) {
        CHECK_THROWS(select_isa(Isa::avx2));
    }
}

#if defined(WHICHWAY_HAVE_AVX2)

TEST_CASE("avx2 direct kernel matches scalar") {
    if (!isa_available(Isa::avx2)) {
        MESSAGE("CPU lacks AVX2/FMA; skipping");
        return;
    }
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    std::uniform_real_distribution<double> ut(-std::numbers::pi, std::numbers::pi);
    const Geometry geoms[] = {kStandardGeometry,
                              {6e-7, 2e-4, 0.5, 3e-6},
                              {1e-10, 5e-7, 1.0, 1e-7},
                              {5e-7, 3e-5, 1.0, 1e-5}};
    for (const Geometry &g : geoms) {
        for (int trial = 0; trial < 5; ++trial) {
            const JointState js = JointState::symmetric(g, make_detector_pair(us(rng), ut(rng)));
            const double w = fringe_width(g);
            // Odd length exercises the scalar tail.
            for (std::size_t n : {std::size_t{1}, std::size_t{7}, std::size_t{8193}}) {
                const auto x = linspace(-8 * w, 8 * w, std::max<std::size_t>(n, 2));
                Buffers a(x.size());
                Buffers b(x.size());
                const auto p = direct_params(js);
                scalar::direct(x, p, a.out());
                avx2::direct(x, p, b.out());
                CHECK(worst_gap(a, b) <= 1e-12);
            }
            // Conditioned parameters use a single channel.
            const auto x = linspace(-5 * w, 5 * w, 1001);
            Buffers a(x.size());
            Buffers b(x.size());
            const auto p = conditional_params(js, rotated_basis(ut(rng)).b1());
            scalar::direct(x, p, a.out());
            avx2::direct(x, p, b.out());
            CHECK(worst_gap(a, b) <= 1e-12);
        }
    }
}

TEST_CASE("avx2 closed-form kernel matches scalar") {
    if (!isa_available(Isa::avx2)) {
        MESSAGE("CPU lacks AVX2/FMA; skipping");
        return;
    }
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> us(0.0, 1.0);
    std::uniform_real_distribution<double> ut(-std::numbers::pi, std::numbers::pi);
    for (int trial = 0; trial < 20; ++trial) {
        const JointState js =
            JointState::symmetric(kStandardGeometry, make_detector_pair(us(rng), ut(rng)));
        const auto x = linspace(-0.06, 0.06, 8191);
        Buffers a(x.size());
        Buffers b(x.size());
        const auto p = closed_form_params(js);
        scalar::closed_form(x, p, a.out());
        avx2::closed_form(x, p, b.out());
        CHECK(worst_gap(a, b) <= 1e-12);
    }
}

TEST_CASE("vector exp tracks libm") {
    std::vector<double> in;
    for (double v = -745.5; v <= 710.0; v += 0.37) {
        in.push_back(v);
    }
    for (double v : {0.0, -0.0, 1e-300, -1e-300, 709.78, 709.79, -745.13, -746.0,
                     std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity()}) {
        in.push_back(v);
    }
    std::vector<double> out(in.size());
    avx2::exp_array(in, out);
    for (std::size_t i = 0; i < in.size(); ++i) {
        const double ref = std::exp(in[i]);
        if (std::isinf(ref) || ref == 0.0) {
            CHECK(out[i] == ref);
        } else if (ref < std::numeric_limits<double>::min()) {
            // Subnormal results lose relative precision in both.
            CHECK(std::abs(out[i] - ref) <= 4 * std::numeric_limits<double>::denorm_min());
        } else {
            CHECK(std::abs(out[i] - ref) <= 4e-16 * ref);
        }
    }
    std::vector<double> nan_in{std::numeric_limits<double>::quiet_NaN()};
    std::vector<double> nan_out(1);
    avx2::exp_array(nan_in, nan_out);
    CHECK(std::isnan(nan_out[0]));
}

TEST_CASE("vector sincos tracks libm") {
    std::vector<double> in;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> small(-10.0, 10.0);
    std::uniform_real_distribution<double> large(-1e5, 1e5);
    for (int i = 0; i < 20001; ++i) {
        in.push_back(i % 2 ? small(rng) : large(rng));
    }
    for (double v : {0.0, -0.0, std::numbers::pi / 4, std::numbers::pi / 2, std::numbers::pi,
                     -std::numbers::pi / 2, 1e-300}) {
        in.push_back(v);
    }
    std::vector<double> s(in.size());
    std::vector<double> c(in.size());
    avx2::sincos_array(in, s, c);
    for (std::size_t i = 0; i < in.size(); ++i) {
        CHECK(std::abs(s[i] - std::sin(in[i])) <= 5e-16 * std::max(1.0, std::abs(in[i]) / 1e3));
        CHECK(std::abs(c[i] - std::cos(in[i])) <= 5e-16 * std::max(1.0, std::abs(in[i]) / 1e3));
    }
}

#endif

} // TEST_SUITE
