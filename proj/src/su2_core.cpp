// Copyright 2026 The su2search Authors
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
#include "su2search/su2_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "su2search/errors.hpp"

namespace su2search {

namespace {

constexpr double kUnitaryTol = 1e-12;
// Two success values closer than this count as a tie.
constexpr double kTieTol = 1e-12;

double wrap_phase(double phi) {
    constexpr double pi = std::numbers::pi;
    double wrapped = std::remainder(phi, 2.0 * pi); // [-pi, pi]
    if (wrapped <= -pi) {
        wrapped += 2.0 * pi;
    }
    return wrapped;
}

void require_steps(Steps steps) {
    if (steps < 0) {
        throw DomainError("step count must be non-negative, got " +
                          std::to_string(steps));
    }
}

double sin_squared(double x) {
    const double s = std::sin(x);
    return s * s;
}

StepBound scan_steps(double theta, double asymptotic) {
    const auto last =
        static_cast<Steps>(std::ceil(std::numbers::pi / (2.0 * theta)));
    StepBound best{asymptotic, 0, sin_squared(theta)};
    for (Steps l = 1; l <= last; ++l) {
        const double p = sin_squared(static_cast<double>(2 * l + 1) * theta);
        if (p > best.achieved_probability + kTieTol) {
            best.exact = l;
            best.achieved_probability = p;
        }
    }
    return best;
}

} // namespace

SearchAngle SearchAngle::from_size(std::int64_t n) {
    if (n < 2) {
        throw DomainError("database size must be at least 2, got " +
                          std::to_string(n));
    }
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    return {std::asin(s), s, n};
}

SearchAngle SearchAngle::from_amplitude(double amplitude) {
    if (!(amplitude > 0.0 && amplitude <= 1.0)) {
        throw DomainError("marked amplitude must lie in (0, 1]");
    }
    return {std::asin(amplitude), amplitude, std::nullopt};
}

SearchAngle SearchAngle::from_radians(double theta) {
    if (!(theta > 0.0 && theta <= std::numbers::pi / 2.0)) {
        throw DomainError("search angle must lie in (0, pi/2]");
    }
    return {theta, std::sin(theta), std::nullopt};
}

GeneralSearchAngle::GeneralSearchAngle(double theta_gamma, double phi)
    : theta_(theta_gamma), phi_(wrap_phase(phi)),
      sin_theta_(std::sin(theta_gamma)) {
    if (!(theta_gamma > 0.0 && theta_gamma <= std::numbers::pi / 2.0)) {
        throw DomainError("theta_gamma must lie in (0, pi/2]");
    }
    if (!std::isfinite(phi)) {
        throw DomainError("phase must be finite");
    }
}

GeneralSearchAngle
GeneralSearchAngle::from_marked_amplitude(std::complex<double> amplitude) {
    const double magnitude = std::abs(amplitude);
    if (!(magnitude > 0.0 && magnitude <= 1.0 + 1e-12)) {
        throw DomainError("marked amplitude magnitude must lie in (0, 1]");
    }
    GeneralSearchAngle angle(std::asin(std::min(magnitude, 1.0)),
                             std::arg(amplitude));
    angle.sin_theta_ = std::min(magnitude, 1.0);
    return angle;
}

SU2Operator::SU2Operator(const Eigen::Matrix2cd &entries, int complement_sign)
    : entries_(entries), complement_sign_(complement_sign) {
    if (complement_sign != 1 && complement_sign != -1) {
        throw DomainError("complement sign must be +1 or -1");
    }
    const double unitarity =
        (entries.adjoint() * entries - Eigen::Matrix2cd::Identity())
            .cwiseAbs()
            .maxCoeff();
    if (unitarity > kUnitaryTol) {
        throw DomainError("SU2Operator: matrix is not unitary");
    }
    if (std::abs(std::abs(entries.determinant()) - 1.0) > kUnitaryTol) {
        throw DomainError("SU2Operator: |det| differs from 1");
    }
}

SU2Operator SU2Operator::identity() {
    return {Eigen::Matrix2cd::Identity(), 1, Unchecked{}};
}

SU2Operator SU2Operator::operator*(const SU2Operator &rhs) const {
    return {entries_ * rhs.entries_, complement_sign_ * rhs.complement_sign_,
            Unchecked{}};
}

SU2Operator SU2Operator::pow(Steps steps) const {
    require_steps(steps);
    SU2Operator result = identity();
    SU2Operator base = *this;
    while (steps > 0) {
        if (steps & 1) {
            result = base * result;
        }
        base = base * base;
        steps >>= 1;
    }
    return result;
}

Eigen::Matrix2cd plane_rotation(double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    Eigen::Matrix2cd r;
    r << c, s, -s, c;
    return r;
}

SearchAngle angle_from_size(std::int64_t n) {
    return SearchAngle::from_size(n);
}

SU2Operator search_operator(const SearchAngle &angle) {
    return {plane_rotation(2.0 * angle.theta()), -1};
}

SU2Operator general_search_operator(const GeneralSearchAngle &angle) {
    using namespace std::complex_literals;
    const double c = std::cos(2.0 * angle.theta());
    const double s = std::sin(2.0 * angle.theta());
    const std::complex<double> phase = std::exp(1i * angle.phi());
    Eigen::Matrix2cd m;
    m << c, s * phase, -s * std::conj(phase), c;
    return {m, -1};
}

double ideal_success_probability(const SearchAngle &angle, Steps steps) {
    require_steps(steps);
    return sin_squared(static_cast<double>(2 * steps + 1) * angle.theta());
}

double general_success_probability(const GeneralSearchAngle &angle,
                                   Steps steps) {
    require_steps(steps);
    return sin_squared(static_cast<double>(2 * steps + 1) * angle.theta());
}

StepBound optimal_steps(const SearchAngle &angle) {
    const double asymptotic =
        angle.size()
            ? std::numbers::pi / 4.0 *
                      std::sqrt(static_cast<double>(*angle.size())) -
                  0.5
            : std::numbers::pi / (4.0 * angle.sin_theta()) - 0.5;
    return scan_steps(angle.theta(), asymptotic);
}

StepBound optimal_steps(const GeneralSearchAngle &angle) {
    return scan_steps(angle.theta(),
                      std::numbers::pi / (4.0 * angle.sin_theta()) - 0.5);
}

StepBound multi_state_bound(std::int64_t n, std::int64_t s) {
    if (s < 1 || s >= n) {
        throw DomainError("marked count must satisfy 1 <= s < n");
    }
    const double amplitude =
        std::sqrt(static_cast<double>(s) / static_cast<double>(n));
    return optimal_steps(SearchAngle::from_amplitude(amplitude));
}

Eigen::Matrix2cd generator_hamiltonian(const SearchAngle &angle, double t0) {
    using namespace std::complex_literals;
    if (!(t0 > 0.0)) {
        throw DomainError("step duration t0 must be positive");
    }
    const double w = 2.0 * angle.theta() / t0;
    Eigen::Matrix2cd h;
    h << 0.0, 1i * w, -1i * w, 0.0;
    return h;
}

} // namespace su2search
