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
#include <cstdint>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "su2search/errors.hpp"
#include "su2search/linalg.hpp"
#include "su2search/random.hpp"

namespace su2search {
namespace {

using C = std::complex<double>;

TEST(Linalg, PropagatorMatchesPadeExponential) {
    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t d = 1 + rng.index(12);
        const Eigen::MatrixXcd h = random_hermitian(rng, d, 1.0);
        const double t = 5.0 * rng.uniform();
        const Eigen::MatrixXcd want = oracle::pade_exp(C(0, -t) * h);
        EXPECT_LT((linalg::hermitian_propagator(h, t) - want).cwiseAbs().maxCoeff(),
                  1e-12);
        const Eigen::VectorXcd v = random_unit_vector(rng, d);
        EXPECT_LT((linalg::HermitianSpectrum(h).evolve(v, t) - want * v)
                      .cwiseAbs()
                      .maxCoeff(),
                  1e-12);
    }
}

TEST(Linalg, RejectsNonHermitian) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(2, 2);
    h(0, 1) = C(0.0, 1.0);
    EXPECT_FALSE(linalg::is_hermitian(h));
    EXPECT_THROW((void)linalg::hermitian_propagator(h, 1.0), DomainError);
    h(1, 0) = C(0.0, -1.0);
    EXPECT_TRUE(linalg::is_hermitian(h));
    EXPECT_FALSE(linalg::is_hermitian(Eigen::MatrixXcd::Zero(2, 3)));
}

TEST(Linalg, EigenvaluesSorted) {
    Eigen::MatrixXcd h(2, 2);
    h << 1.0, C(0, 2), C(0, -2), 1.0;
    const linalg::HermitianSpectrum spectrum(h);
    const Eigen::VectorXd &ev = spectrum.eigenvalues();
    EXPECT_NEAR(ev[0], -1.0, 1e-14);
    EXPECT_NEAR(ev[1], 3.0, 1e-14);
}

TEST(RngTest, EngineOutputIsStandardMt19937_64) {
    // The 10000th output of a default-seeded mt19937_64 is fixed by the
    // C++ standard.
    std::mt19937_64 engine;
    engine.discard(9999);
    EXPECT_EQ(engine(), 9981545732273789042ULL);
}

TEST(RngTest, UniformIsTopFiftyThreeBits) {
    std::mt19937_64 engine(99);
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        const std::uint64_t w = engine();
        EXPECT_EQ(rng.uniform(), double(w >> 11) * 0x1.0p-53);
    }
}

TEST(RngTest, NormalIsBoxMullerCosBranch) {
    std::mt19937_64 engine(7);
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const double u1 = 1.0 - double(engine() >> 11) * 0x1.0p-53;
        const double u2 = double(engine() >> 11) * 0x1.0p-53;
        const double want =
            std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
        EXPECT_EQ(rng.normal(), want);
    }
}

TEST(RngTest, IndexIsHighWordOfProduct) {
    std::mt19937_64 engine(5);
    Rng rng(5);
    for (std::uint64_t n : {1ULL, 2ULL, 7ULL, 1000ULL, 1ULL << 40}) {
        const std::uint64_t w = engine();
        __extension__ using u128 = unsigned __int128;
        const auto want = static_cast<std::uint64_t>((u128(w) * n) >> 64);
        EXPECT_EQ(rng.index(n), want);
    }
}

TEST(RngTest, SameSeedSameStream) {
    Rng a(123), b(123), c(124);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform();
        EXPECT_EQ(x, b.uniform());
        differs = differs || x != c.uniform();
    }
    EXPECT_TRUE(differs);
}

TEST(RngTest, NormalMoments) {
    Rng rng(2024);
    double s = 0, s2 = 0;
    const int count = 200000;
    for (int i = 0; i < count; ++i) {
        const double x = rng.normal();
        s += x;
        s2 += x * x;
    }
    EXPECT_NEAR(s / count, 0.0, 0.01);
    EXPECT_NEAR(s2 / count, 1.0, 0.01);
}

TEST(RandomObjects, UnitVectorAndHermitian) {
    Rng rng(8);
    for (std::size_t d : {1u, 2u, 9u}) {
        EXPECT_NEAR(random_unit_vector(rng, d).norm(), 1.0, 1e-14);
        const Eigen::MatrixXcd h = random_hermitian(rng, d, 0.3);
        EXPECT_EQ(h, Eigen::MatrixXcd(h.adjoint()));
    }
}

} // namespace
} // namespace su2search
