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
#include "whichway/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "whichway/errors.hpp"

namespace whichway {

namespace {

double norm2(const std::array<double, 3> &n) {
    return n[0] * n[0] + n[1] * n[1] + n[2] * n[2];
}

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol; }

} // namespace

Complex checked_amplitude(Complex c) {
    WW_REQUIRE(std::isfinite(c.real()) && std::isfinite(c.imag()),
               "amplitude must be finite");
    return c;
}

DetectorState::DetectorState(Complex c1, Complex c2)
    : c1_(checked_amplitude(c1)), c2_(checked_amplitude(c2)) {
    const double n = std::norm(c1_) + std::norm(c2_);
    WW_REQUIRE(std::abs(n - 1.0) <= kNormTolerance,
               "detector state is not normalized: |c1|^2 + |c2|^2 = " +
                   std::to_string(n));
}

DetectorState DetectorState::from_bloch(const std::array<double, 3> &n) {
    WW_REQUIRE(std::abs(norm2(n) - 1.0) <= kNormTolerance,
               "Bloch vector must have unit length");
    // Half-angle forms avoid acos() loss near the poles.
    const double z = std::clamp(n[2], -1.0, 1.0);
    const double cos_half = std::sqrt((1.0 + z) / 2.0);
    const double rho = std::hypot(n[0], n[1]);
    if (rho == 0.0) {
        return z > 0 ? DetectorState{1.0, 0.0} : DetectorState{0.0, 1.0};
    }
    // sin(t/2) = rho / (2 cos(t/2)) is exact when z is near +1; use the other
    // branch near the south pole.
    const double sin_half = z >= 0 ? rho / (2.0 * cos_half)
                                   : std::sqrt((1.0 - z) / 2.0);
    const double c = z >= 0 ? cos_half : rho / (2.0 * sin_half);
    const Complex phase{n[0] / rho, n[1] / rho};
    // Renormalize away the last ulp so the 1e-12 gate never trips on
    // lattice points.
    const double scale = 1.0 / std::sqrt(c * c + sin_half * sin_half);
    return {c * scale, phase * (sin_half * scale)};
}

std::array<double, 3> DetectorState::bloch() const noexcept {
    const Complex cross = std::conj(c1_) * c2_;
    return {2.0 * cross.real(), 2.0 * cross.imag(),
            std::norm(c1_) - std::norm(c2_)};
}

Complex inner_product(const DetectorState &a, const DetectorState &b) noexcept {
    return std::conj(a.c1()) * b.c1() + std::conj(a.c2()) * b.c2();
}

DetectorPair::DetectorPair(const DetectorState &d1)
    : DetectorPair(d1, DetectorState{std::conj(d1.c2()), std::conj(d1.c1())}) {}

DetectorPair::DetectorPair(const DetectorState &d1, const DetectorState &d2)
    : d1_(d1), d2_(d2) {
    WW_REQUIRE(close(d2.c1(), std::conj(d1.c2()), kNormTolerance) &&
                   close(d2.c2(), std::conj(d1.c1()), kNormTolerance),
               "d2 must equal (conj(c2), conj(c1)) of d1");
    const Complex overlap21 = inner_product(d2_, d1_);
    overlap_ = std::min(std::abs(overlap21), 1.0);
    phase_ = std::arg(overlap21);
}

DetectorPair make_detector_pair(double overlap, double phase) {
    WW_REQUIRE(std::isfinite(overlap) && overlap >= 0.0 && overlap <= 1.0,
               "overlap must lie in [0, 1]");
    WW_REQUIRE(std::isfinite(phase), "overlap phase must be finite");
    const double root = std::sqrt((1.0 - overlap) * (1.0 + overlap));
    const double p1 = (1.0 + root) / 2.0;
    // (1 - root)/2 rewritten without cancellation for small overlaps.
    const double p2 = overlap * overlap / (2.0 * (1.0 + root));
    const Complex half_phase = std::polar(1.0, phase / 2.0);
    return DetectorPair{
        DetectorState{std::sqrt(p1) * half_phase, std::sqrt(p2) * half_phase}};
}

DichotomicObservable::DichotomicObservable(const std::array<double, 3> &bloch)
    : n_(bloch) {
    WW_REQUIRE(std::isfinite(norm2(bloch)) &&
                   std::abs(std::sqrt(norm2(bloch)) - 1.0) <= kNormTolerance,
               "observable Bloch vector must have unit length");
}

DichotomicObservable sigma1() { return DichotomicObservable{{1.0, 0.0, 0.0}}; }
DichotomicObservable sigma2() { return DichotomicObservable{{0.0, 1.0, 0.0}}; }
DichotomicObservable sigma3() { return DichotomicObservable{{0.0, 0.0, 1.0}}; }

double expectation(const DetectorState &state,
                   const DichotomicObservable &obs) noexcept {
    const auto r = state.bloch();
    const auto &n = obs.bloch();
    return r[0] * n[0] + r[1] * n[1] + r[2] * n[2];
}

double variance(const DetectorState &state,
                const DichotomicObservable &obs) noexcept {
    const double mean = expectation(state, obs);
    return std::max(0.0, 1.0 - mean * mean);
}

SumUncertainty sum_uncertainty(const DetectorState &state) noexcept {
    const double v2 = variance(state, sigma2());
    const double v3 = variance(state, sigma3());
    return {v2, v3, v2 + v3};
}

MeasurementBasis::MeasurementBasis(const DetectorState &b1,
                                   const DetectorState &b2)
    : b1_(b1), b2_(b2) {
    WW_REQUIRE(std::abs(inner_product(b1, b2)) <= kNormTolerance,
               "measurement basis states must be orthogonal");
}

MeasurementBasis which_way_basis() {
    return {DetectorState{1.0, 0.0}, DetectorState{0.0, 1.0}};
}

MeasurementBasis mub_basis() {
    constexpr double h = std::numbers::sqrt2 / 2.0;
    return {DetectorState{h, h}, DetectorState{h, -h}};
}

MeasurementBasis rotated_basis(double angle) {
    WW_REQUIRE(std::isfinite(angle), "basis angle must be finite");
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {DetectorState{c, s}, DetectorState{s, -c}};
}

} // namespace whichway
