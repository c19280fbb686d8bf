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

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "su2search/errors.hpp"
#include "su2search/random.hpp"
#include "su2search/su2_core.hpp"

namespace su2search {
namespace {

using std::numbers::pi;
using C = std::complex<double>;

double max_abs_diff(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

TEST(AngleFromSize, SmallSizes) {
    EXPECT_NEAR(angle_from_size(4).theta(), pi / 6, 1e-15);
    EXPECT_NEAR(angle_from_size(2).theta(), pi / 4, 1e-15);
    EXPECT_EQ(angle_from_size(4).size(), 4);
}

TEST(AngleFromSize, MillionMatchesSeries) {
    // asin(1e-3) to 40 digits: 1.000000166666741666711309554...e-3
    const double theta = angle_from_size(1000000).theta();
    EXPECT_NEAR(theta, 1.0000001666667417e-3, 1e-18);
    EXPECT_NEAR(theta, oracle::asin_series(1e-3), 1e-18);
}

TEST(AngleFromSize, RejectsTinyRegisters) {
    EXPECT_THROW((void)angle_from_size(1), DomainError);
    EXPECT_THROW((void)angle_from_size(0), DomainError);
    EXPECT_THROW((void)angle_from_size(-5), DomainError);
}

TEST(SearchAngle, AmplitudeAndRadiansFactories) {
    EXPECT_NEAR(SearchAngle::from_amplitude(0.5).theta(), pi / 6, 1e-15);
    EXPECT_FALSE(SearchAngle::from_amplitude(0.5).size().has_value());
    EXPECT_NEAR(SearchAngle::from_radians(0.3).sin_theta(), std::sin(0.3),
                1e-16);
    EXPECT_THROW((void)SearchAngle::from_amplitude(0.0), DomainError);
    EXPECT_THROW((void)SearchAngle::from_amplitude(1.5), DomainError);
    EXPECT_THROW((void)SearchAngle::from_radians(-0.1), DomainError);
    EXPECT_THROW((void)SearchAngle::from_radians(2.0), DomainError);
}

TEST(SearchOperator, SixthOfPi) {
    const auto s = search_operator(SearchAngle::from_radians(pi / 6));
    Eigen::Matrix2cd want;
    want << 0.5, std::sqrt(3.0) / 2, -std::sqrt(3.0) / 2, 0.5;
    EXPECT_LT(max_abs_diff(s.entries(), want), 1e-15);
    EXPECT_EQ(s.complement_sign(), -1);
}

TEST(SearchOperator, QuarterTurn) {
    const auto s = search_operator(angle_from_size(2));
    Eigen::Matrix2cd want;
    want << 0, 1, -1, 0;
    EXPECT_LT(max_abs_diff(s.entries(), want), 1e-15);
    EXPECT_EQ(s.complement_sign(), -1);
}

TEST(SearchOperator, ThreeFoldIsMinusIdentity) {
    const auto s = search_operator(SearchAngle::from_radians(pi / 6));
    const auto s3 = s * s * s;
    EXPECT_LT(max_abs_diff(s3.entries(), -Eigen::Matrix2cd::Identity()), 1e-15);
    EXPECT_EQ(s3.complement_sign(), -1);
    EXPECT_EQ(s.pow(2).complement_sign(), 1);
}

TEST(SearchOperator, PowerIsRotationByMultipleAngle) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const double theta = 1e-3 + (pi / 2 - 2e-3) * rng.uniform();
        const Steps l = static_cast<Steps>(rng.index(10001));
        const auto sl = search_operator(SearchAngle::from_radians(theta)).pow(l);
        // Extended precision keeps the reference angle 2 l theta exact to
        // well below the 1e-12 tolerance even at l = 1e4.
        const long double a = 2.0L * static_cast<long double>(l) * theta;
        const double c = static_cast<double>(std::cos(a));
        const double s = static_cast<double>(std::sin(a));
        Eigen::Matrix2cd want;
        want << c, s, -s, c;
        EXPECT_LT(max_abs_diff(sl.entries(), want), 1e-12)
            << "theta=" << theta << " l=" << l;
        EXPECT_EQ(sl.complement_sign(), (l % 2 == 0) ? 1 : -1);
    }
}

TEST(SearchOperator, MatchesReflectionProduct) {
    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const double theta = 0.01 + 1.5 * rng.uniform();
        Eigen::Vector2cd psi(std::sin(theta), std::cos(theta));
        Eigen::Matrix2cd i_m = Eigen::Matrix2cd::Identity();
        i_m(0, 0) = -1.0;
        const Eigen::Matrix2cd diffusion =
            2.0 * psi * psi.adjoint() - Eigen::Matrix2cd::Identity();
        const Eigen::Matrix2cd want = diffusion * i_m;
        EXPECT_LT(max_abs_diff(
                      search_operator(SearchAngle::from_radians(theta)).entries(),
                      want),
                  1e-14);
    }
}

TEST(SU2Operator, RejectsNonUnitary) {
    Eigen::Matrix2cd m;
    m << 1.0, 0.1, 0.0, 1.0;
    EXPECT_THROW((SU2Operator(m, -1)), DomainError);
    EXPECT_THROW((SU2Operator(Eigen::Matrix2cd::Identity(), 2)), DomainError);
    EXPECT_THROW((void)SU2Operator::identity().pow(-1), DomainError);
}

TEST(GeneralSearchOperator, ZeroPhaseReducesToSearchOperator) {
    const double theta = 0.37;
    const auto g = general_search_operator(GeneralSearchAngle(theta, 0.0));
    const auto s = search_operator(SearchAngle::from_radians(theta));
    EXPECT_LT(max_abs_diff(g.entries(), s.entries()), 1e-16);
    EXPECT_EQ(g.complement_sign(), -1);
}

TEST(GeneralSearchOperator, SixthOfPiQuarterPhase) {
    const auto g = general_search_operator(GeneralSearchAngle(pi / 6, pi / 2));
    const double h = std::sqrt(3.0) / 2;
    Eigen::Matrix2cd want;
    want << 0.5, C(0, h), C(0, h), 0.5;
    EXPECT_LT(max_abs_diff(g.entries(), want), 1e-15);
}

TEST(GeneralSearchOperator, PhaseConjugatedRotation) {
    Rng rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const double theta = 1e-3 + 1.5 * rng.uniform();
        const double phi = 2 * pi * rng.uniform() - pi;
        const auto g = general_search_operator(GeneralSearchAngle(theta, phi));
        Eigen::Matrix2cd d = Eigen::Matrix2cd::Identity();
        d(0, 0) = std::polar(1.0, phi);
        const Eigen::Matrix2cd want = d * plane_rotation(2 * theta) * d.adjoint();
        EXPECT_LT(max_abs_diff(g.entries(), want), 1e-15);
        const Eigen::Matrix2cd uu = g.entries().adjoint() * g.entries();
        EXPECT_LT(max_abs_diff(uu, Eigen::Matrix2cd::Identity()), 1e-14);
        EXPECT_NEAR(std::abs(g.entries().determinant()), 1.0, 1e-14);
    }
}

TEST(GeneralSearchAngle, WrapsPhaseAndValidates) {
    EXPECT_NEAR(GeneralSearchAngle(0.2, 3 * pi).phi(), pi, 1e-14);
    EXPECT_NEAR(GeneralSearchAngle(0.2, -pi / 2).phi(), -pi / 2, 1e-16);
    EXPECT_THROW((GeneralSearchAngle(0.0, 0.0)), DomainError);
    EXPECT_THROW((GeneralSearchAngle(2.0, 0.0)), DomainError);
    const auto a = GeneralSearchAngle::from_marked_amplitude(std::polar(0.01, 1.3));
    EXPECT_NEAR(a.sin_theta(), 0.01, 1e-17);
    EXPECT_NEAR(a.phi(), 1.3, 1e-15);
    EXPECT_THROW((void)GeneralSearchAngle::from_marked_amplitude(C(0, 0)),
                 DomainError);
}

TEST(IdealSuccessProbability, Examples) {
    EXPECT_NEAR(ideal_success_probability(angle_from_size(4), 1), 1.0, 1e-15);
    for (std::int64_t n : {2, 3, 4, 17, 1000, 1000000}) {
        EXPECT_NEAR(ideal_success_probability(angle_from_size(n), 0),
                    1.0 / double(n), 1e-15);
    }
    // sin^2(15 asin 0.1) to 18 digits; cross-checked below with the dense
    // N = 100 iterate.
    const double p = ideal_success_probability(angle_from_size(100), 7);
    EXPECT_NEAR(p, 0.995344400357599021, 1e-14);
    Eigen::VectorXcd uniform = Eigen::VectorXcd::Constant(100, 0.1);
    EXPECT_NEAR(p, oracle::dense_trace(uniform, {42}, 7)[7], 1e-12);
}

TEST(IdealSuccessProbability, NegativeStepsRejected) {
    EXPECT_THROW((void)ideal_success_probability(angle_from_size(4), -1),
                 DomainError);
    EXPECT_THROW(
        (void)general_success_probability(GeneralSearchAngle(0.1, 0.0), -3),
        DomainError);
}

TEST(GeneralSuccessProbability, Examples) {
    for (std::int64_t n : {4, 100, 9999}) {
        const auto ideal = angle_from_size(n);
        for (Steps l : {0, 1, 5, 30}) {
            EXPECT_NEAR(
                general_success_probability(GeneralSearchAngle(ideal.theta(), 0.7),
                                            l),
                ideal_success_probability(ideal, l), 1e-15);
        }
    }
    // sin^2(1.57)
    EXPECT_NEAR(general_success_probability(GeneralSearchAngle(0.01, 1.3), 78),
                0.99999936586376977, 1e-14);
    EXPECT_NEAR(general_success_probability(GeneralSearchAngle(0.4, 2.0), 0),
                std::pow(std::sin(0.4), 2), 1e-16);
}

TEST(GeneralSuccessProbability, PhaseInvariant) {
    Rng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const double theta = 1e-3 + 1.5 * rng.uniform();
        const Steps l = static_cast<Steps>(rng.index(500));
        const double a = general_success_probability(
            GeneralSearchAngle(theta, 2 * pi * rng.uniform()), l);
        const double b = general_success_probability(
            GeneralSearchAngle(theta, 2 * pi * rng.uniform()), l);
        EXPECT_LE(std::abs(a - b), 1e-14);
    }
}

TEST(OptimalSteps, Examples) {
    const auto four = optimal_steps(angle_from_size(4));
    EXPECT_EQ(four.exact, 1);
    EXPECT_NEAR(four.achieved_probability, 1.0, 1e-15);

    const auto million = optimal_steps(angle_from_size(1000000));
    EXPECT_NEAR(million.asymptotic, pi / 4 * 1000 - 0.5, 1e-9);
    EXPECT_NEAR(million.asymptotic, 784.898, 1e-3);

    const auto two = optimal_steps(angle_from_size(2));
    EXPECT_EQ(two.exact, 0);
    EXPECT_NEAR(two.achieved_probability, 0.5, 1e-15);
}

TEST(OptimalSteps, TenThousandIsSeventyEight) {
    // P(77) = 0.99956865, P(78) = 0.99999941, P(79) = 0.99963025
    const auto b = optimal_steps(angle_from_size(10000));
    EXPECT_EQ(b.exact, 78);
    EXPECT_NEAR(b.achieved_probability, 0.99999941, 1e-8);
}

TEST(OptimalSteps, ExactIsBruteForceArgmax) {
    Rng rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.index(3000));
        const double theta = std::asin(1.0 / std::sqrt(double(n)));
        Steps best = 0;
        double best_p = -1.0;
        const Steps last = static_cast<Steps>(std::ceil(pi / (2 * theta)));
        for (Steps l = 0; l <= last; ++l) {
            const double p = std::pow(std::sin(double(2 * l + 1) * theta), 2);
            if (p > best_p + 1e-12) {
                best = l;
                best_p = p;
            }
        }
        const auto b = optimal_steps(angle_from_size(n));
        EXPECT_EQ(b.exact, best) << "n=" << n;
        EXPECT_NEAR(b.achieved_probability, best_p, 1e-15);
    }
}

TEST(OptimalSteps, ExactWithinOneOfAsymptoticLogUniform) {
    Rng rng(16);
    for (int trial = 0; trial < 200; ++trial) {
        const double lg = std::log(4.0) + rng.uniform() * std::log(1e6 / 4.0);
        const auto n = static_cast<std::int64_t>(std::llround(std::exp(lg)));
        const auto b = optimal_steps(angle_from_size(n));
        EXPECT_LE(std::abs(double(b.exact) - b.asymptotic), 1.0) << "n=" << n;
    }
}

TEST(OptimalSteps, GeneralAngleUsesMarkedAmplitude) {
    const auto b = optimal_steps(GeneralSearchAngle(0.01, 1.3));
    EXPECT_NEAR(b.asymptotic, pi / (4 * std::sin(0.01)) - 0.5, 1e-12);
    EXPECT_EQ(b.exact, 78);
}

TEST(MultiStateBound, Examples) {
    EXPECT_EQ(multi_state_bound(4, 1).exact, 1);
    const auto b = multi_state_bound(16, 4);
    EXPECT_EQ(b.exact, 1);
    EXPECT_NEAR(b.achieved_probability, 1.0, 1e-15);
    EXPECT_NEAR(multi_state_bound(10000, 4).asymptotic, pi / 4 * 50 - 0.5,
                1e-9);
}

TEST(MultiStateBound, RejectsBadCounts) {
    EXPECT_THROW((void)multi_state_bound(4, 4), DomainError);
    EXPECT_THROW((void)multi_state_bound(4, 0), DomainError);
    EXPECT_THROW((void)multi_state_bound(4, 7), DomainError);
}

TEST(GeneratorHamiltonian, SixthOfPi) {
    const auto h = generator_hamiltonian(SearchAngle::from_radians(pi / 6), 1.0);
    Eigen::Matrix2cd want;
    want << 0, C(0, pi / 3), C(0, -pi / 3), 0;
    EXPECT_LT(max_abs_diff(h, want), 1e-15);
    const Eigen::Matrix2cd u = oracle::pade_exp(C(0, -1) * h);
    EXPECT_LT(max_abs_diff(u, plane_rotation(pi / 3)), 1e-14);
}

TEST(GeneratorHamiltonian, SmallAngleLimitAndHermiticity) {
    const auto h = generator_hamiltonian(SearchAngle::from_radians(1e-12), 2.0);
    EXPECT_LT(h.cwiseAbs().maxCoeff(), 1e-11);
    const Eigen::Matrix2cd u = oracle::pade_exp(C(0, -2.0) * h);
    EXPECT_LT(max_abs_diff(u, Eigen::Matrix2cd::Identity()), 1e-11);
    EXPECT_LT(max_abs_diff(h, h.adjoint()), 1e-16);
    EXPECT_THROW((void)generator_hamiltonian(angle_from_size(4), 0.0),
                 DomainError);
    EXPECT_THROW((void)generator_hamiltonian(angle_from_size(4), -1.0),
                 DomainError);
}

TEST(GeneratorHamiltonian, ExponentialIsSearchOperator) {
    Rng rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const double theta = 1e-4 + 1.5 * rng.uniform();
        const double t0 = 0.01 + 10 * rng.uniform();
        const auto angle = SearchAngle::from_radians(theta);
        const Eigen::Matrix2cd u =
            oracle::pade_exp(C(0, -t0) * generator_hamiltonian(angle, t0));
        EXPECT_LT(max_abs_diff(u, search_operator(angle).entries()), 1e-10);
    }
}

} // namespace
} // namespace su2search
