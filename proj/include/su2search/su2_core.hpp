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
/**
 * @file
 * Closed-form search dynamics on the two-dimensional plane spanned by the
 * marked state |m> and the collective state |c> of the unmarked items.
 *
 * Plane vectors and operators use the ordered basis (marked, collective).
 */
#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>

namespace su2search {

using Steps = std::int64_t;

/// Half the rotation angle of one search step. sin(theta) is the overlap of
/// the initial state with the marked state.
class SearchAngle {
  public:
    /// sin(theta) = 1/sqrt(n). Requires n >= 2 so that |c> exists.
    [[nodiscard]] static SearchAngle from_size(std::int64_t n);

    /// sin(theta) = amplitude, amplitude in (0, 1].
    [[nodiscard]] static SearchAngle from_amplitude(double amplitude);

    /// theta in (0, pi/2].
    [[nodiscard]] static SearchAngle from_radians(double theta);

    [[nodiscard]] double theta() const noexcept { return theta_; }
    [[nodiscard]] double sin_theta() const noexcept { return sin_theta_; }
    [[nodiscard]] std::optional<std::int64_t> size() const noexcept {
        return size_;
    }

  private:
    SearchAngle(double theta, double sin_theta, std::optional<std::int64_t> n)
        : theta_(theta), sin_theta_(sin_theta), size_(n) {}

    double theta_;
    double sin_theta_;
    std::optional<std::int64_t> size_;
};

/// Angle and phase of an arbitrary initial state |gamma>, with
/// <m|gamma> = sin(theta_gamma) e^{i phi}.
class GeneralSearchAngle {
  public:
    /// theta_gamma in (0, pi/2]; phi is wrapped into (-pi, pi].
    GeneralSearchAngle(double theta_gamma, double phi);

    /// From the marked amplitude <m|gamma>, |<m|gamma>| in (0, 1].
    [[nodiscard]] static GeneralSearchAngle
    from_marked_amplitude(std::complex<double> amplitude);

    [[nodiscard]] double theta() const noexcept { return theta_; }
    [[nodiscard]] double phi() const noexcept { return phi_; }
    [[nodiscard]] double sin_theta() const noexcept { return sin_theta_; }

  private:
    double theta_;
    double phi_;
    double sin_theta_;
};

/// 2x2 unitary on the search plane plus the sign it applies to every vector
/// orthogonal to the plane.
class SU2Operator {
  public:
    /// Validates unitarity and |det| = 1 to 1e-12.
    SU2Operator(const Eigen::Matrix2cd &entries, int complement_sign);

    [[nodiscard]] static SU2Operator identity();

    [[nodiscard]] const Eigen::Matrix2cd &entries() const noexcept {
        return entries_;
    }
    [[nodiscard]] int complement_sign() const noexcept {
        return complement_sign_;
    }

    /// Composition: (*this) applied after rhs.
    [[nodiscard]] SU2Operator operator*(const SU2Operator &rhs) const;

    /// steps-fold composition by repeated squaring.
    [[nodiscard]] SU2Operator pow(Steps steps) const;

    [[nodiscard]] Eigen::Vector2cd apply(const Eigen::Vector2cd &v) const {
        return entries_ * v;
    }

  private:
    struct Unchecked {};
    SU2Operator(const Eigen::Matrix2cd &entries, int sign, Unchecked)
        : entries_(entries), complement_sign_(sign) {}

    Eigen::Matrix2cd entries_;
    int complement_sign_;
};

struct StepBound {
    double asymptotic;             ///< closed-form estimate of the best step
    Steps exact;                   ///< smallest argmax of the success curve
    double achieved_probability;   ///< success probability at exact
};

/// Rotation [[cos a, sin a], [-sin a, cos a]].
[[nodiscard]] Eigen::Matrix2cd plane_rotation(double angle);

[[nodiscard]] SearchAngle angle_from_size(std::int64_t n);

/// One step -I_psi I_m: rotation by 2 theta on the plane, -1 off it.
[[nodiscard]] SU2Operator search_operator(const SearchAngle &angle);

/// One step -I_gamma I_m for an arbitrary initial state.
[[nodiscard]] SU2Operator
general_search_operator(const GeneralSearchAngle &angle);

/// sin^2((2 steps + 1) theta)
[[nodiscard]] double ideal_success_probability(const SearchAngle &angle,
                                               Steps steps);

/// sin^2((2 steps + 1) theta_gamma); independent of phi.
[[nodiscard]] double
general_success_probability(const GeneralSearchAngle &angle, Steps steps);

/// The asymptotic field is pi sqrt(n)/4 - 1/2 when the angle carries n and
/// pi / (4 sin theta) - 1/2 otherwise. The exact field scans
/// l in [0, ceil(pi / (2 theta))] and keeps the first maximum.
[[nodiscard]] StepBound optimal_steps(const SearchAngle &angle);
[[nodiscard]] StepBound optimal_steps(const GeneralSearchAngle &angle);

/// s marked items out of n under the uniform start: sin(theta_s) = sqrt(s/n).
[[nodiscard]] StepBound multi_state_bound(std::int64_t n, std::int64_t s);

/// H0 = i (2 theta / t0) (|m><c| - |c><m|), so that exp(-i t0 H0) is the
/// search rotation.
[[nodiscard]] Eigen::Matrix2cd generator_hamiltonian(const SearchAngle &angle,
                                                     double t0);

} // namespace su2search
