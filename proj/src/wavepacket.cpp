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
#include "whichway/wavepacket.hpp"

#include <cmath>
#include <numbers>

#include "whichway/errors.hpp"

namespace whichway {

namespace {
bool positive(double v) { return std::isfinite(v) && v > 0.0; }
} // namespace

void Geometry::validate() const {
    WW_REQUIRE(positive(lambda_d), "geometry.lambda_d must be finite and > 0");
    WW_REQUIRE(positive(slit_sep), "geometry.slit_sep must be finite and > 0");
    WW_REQUIRE(positive(screen_dist),
               "geometry.screen_dist must be finite and > 0");
    WW_REQUIRE(positive(packet_width),
               "geometry.packet_width must be finite and > 0");
}

double effective_tau(const Geometry &geom) {
    geom.validate();
    return geom.lambda_d * geom.screen_dist / (2.0 * std::numbers::pi);
}

double spread_sigma(double eps, double tau) {
    WW_REQUIRE(positive(eps), "packet width must be finite and > 0");
    WW_REQUIRE(std::isfinite(tau), "tau must be finite");
    return std::hypot(eps, tau / (2.0 * eps));
}

PropagationContext propagation_context(const Geometry &geom) {
    const double tau = effective_tau(geom);
    return {tau, spread_sigma(geom.packet_width, tau)};
}

double initial_amplitude(double x, double center, double eps) {
    WW_REQUIRE(positive(eps), "packet width must be finite and > 0");
    const double u = x - center;
    return std::pow(8.0 * std::numbers::pi * eps * eps, -0.25) *
           std::exp(-u * u / (4.0 * eps * eps));
}

std::complex<double> spread_prefactor(double eps, double tau) {
    WW_REQUIRE(positive(eps), "packet width must be finite and > 0");
    WW_REQUIRE(std::isfinite(tau), "tau must be finite");
    const std::complex<double> width{eps, tau / (2.0 * eps)};
    const std::complex<double> inner =
        std::sqrt(2.0 * std::numbers::pi) * width;
    return (1.0 / std::numbers::sqrt2) / std::sqrt(inner);
}

std::complex<double> evolved_amplitude(double x, double center, double eps,
                                       double tau) {
    const std::complex<double> a_t = spread_prefactor(eps, tau);
    const double u = x - center;
    const std::complex<double> denom{4.0 * eps * eps, 2.0 * tau};
    return a_t * std::exp(-(u * u) / denom);
}

} // namespace whichway
