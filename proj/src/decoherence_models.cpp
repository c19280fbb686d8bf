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
#include "su2search/decoherence_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "su2search/errors.hpp"

namespace su2search {

namespace {

constexpr double kPointerNormTol = 1e-10;
constexpr double kBoundSlack = 1e-12;
constexpr double kProbabilitySlack = 1e-12;

void require_register(std::int64_t n, std::int64_t minimum, const char *who) {
    if (n < minimum) {
        throw DomainError(std::string(who) + ": register size must be at least " +
                          std::to_string(minimum));
    }
}

void require_steps(Steps steps, const char *who) {
    if (steps < 0) {
        throw DomainError(std::string(who) + ": negative step count");
    }
}

double sin_squared(double x) {
    const double s = std::sin(x);
    return s * s;
}

void require_ensemble_size(const PointerEnsemble &ensemble, const char *who) {
    if (ensemble.size() < 3) {
        throw DomainError(std::string(who) +
                          ": need at least 3 pointers (F1 divides by N-2)");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// PointerEnsemble

PointerEnsemble::PointerEnsemble(Eigen::MatrixXcd pointers,
                                 std::size_t marked_index)
    : pointers_(std::move(pointers)), marked_(marked_index) {
    if (pointers_.rows() == 0 || pointers_.cols() == 0) {
        throw DomainError("PointerEnsemble: empty ensemble");
    }
    if (marked_ >= size()) {
        throw DomainError("PointerEnsemble: marked index out of range");
    }
    const double worst = pointers_.rowwise().norm().maxCoeff();
    if (worst > 1.0 + kPointerNormTol) {
        throw DomainError("PointerEnsemble: pointer norm exceeds 1");
    }
}

bool PointerEnsemble::unit_norm(double tol) const {
    return ((pointers_.rowwise().norm().array() - 1.0).abs() <= tol).all();
}

PointerEnsemble PointerEnsemble::identical(std::size_t n, std::size_t env_dim,
                                           std::size_t marked_index) {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(env_dim));
    p.col(0).setOnes();
    return {std::move(p), marked_index};
}

PointerEnsemble PointerEnsemble::orthonormal(std::size_t n, std::size_t env_dim,
                                             std::size_t marked_index) {
    if (env_dim < n) {
        throw DomainError("orthonormal ensemble needs env_dim >= n");
    }
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(env_dim));
    for (Eigen::Index k = 0; k < p.rows(); ++k) {
        p(k, k) = 1.0;
    }
    return {std::move(p), marked_index};
}

PointerEnsemble PointerEnsemble::phase_matched(std::size_t n,
                                               std::size_t env_dim,
                                               std::size_t marked_index) {
    using namespace std::complex_literals;
    if (n < 3) {
        throw DomainError("phase-matched ensemble needs n >= 3");
    }
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n),
                                                static_cast<Eigen::Index>(env_dim));
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n - 1);
    std::size_t j = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const auto row = static_cast<Eigen::Index>(k);
        if (k == marked_index) {
            p(row, 0) = 1.0;
        } else {
            p(row, 0) = std::exp(1i * (step * static_cast<double>(j++)));
        }
    }
    return {std::move(p), marked_index};
}

PointerEnsemble PointerEnsemble::random(std::size_t n, std::size_t env_dim,
                                        std::size_t marked_index, Rng &rng) {
    Eigen::MatrixXcd p(static_cast<Eigen::Index>(n),
                       static_cast<Eigen::Index>(env_dim));
    for (Eigen::Index k = 0; k < p.rows(); ++k) {
        p.row(k) = random_unit_vector(rng, env_dim).transpose();
    }
    return {std::move(p), marked_index};
}

// ---------------------------------------------------------------------------
// Factor types

DecoherenceFactors DecoherenceFactors::specified(std::int64_t n, double f1,
                                                 double f2) {
    require_register(n, 3, "DecoherenceFactors");
    if (bound_violation(n, f1, f2) > kBoundSlack) {
        throw DomainError("DecoherenceFactors: need -1/(N-2) <= F1 <= 1 and "
                          "|F2| <= 1");
    }
    return {n, f1, f2, FactorSource::Specified};
}

DecoherenceFactors DecoherenceFactors::necoherent(std::int64_t n) {
    require_register(n, 3, "DecoherenceFactors");
    return specified(n, -1.0 / static_cast<double>(n - 2), 0.0);
}

double DecoherenceFactors::bound_violation(std::int64_t n, double f1,
                                           double f2) {
    const double lower = -1.0 / static_cast<double>(n - 2);
    return std::max({0.0, lower - f1, f1 - 1.0, std::abs(f2) - 1.0});
}

MinimalCouplingParams::MinimalCouplingParams(double r, double delta)
    : r_(r), delta_(delta) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw DomainError("minimal coupling: r must lie in [0, 1]");
    }
    if (!std::isfinite(delta)) {
        throw DomainError("minimal coupling: delta must be finite");
    }
}

MinimalCouplingParams
MinimalCouplingParams::from_overlap(std::complex<double> overlap) {
    const double r = std::abs(overlap);
    if (r > 1.0 + kPointerNormTol) {
        throw DomainError("pointer overlap magnitude exceeds 1");
    }
    return {std::min(r, 1.0), 0.5 * std::arg(overlap)};
}

BathSpec::BathSpec(Eigen::VectorXd frequencies, Eigen::MatrixXcd couplings,
                   double step_time)
    : frequencies_(std::move(frequencies)), couplings_(std::move(couplings)),
      step_time_(step_time) {
    if (frequencies_.size() < 1) {
        throw DomainError("BathSpec: at least one mode required");
    }
    if (!(frequencies_.array() > 0.0).all()) {
        throw DomainError("BathSpec: mode frequencies must be positive");
    }
    if (couplings_.cols() != frequencies_.size() || couplings_.rows() < 1) {
        throw DomainError("BathSpec: coupling table must be levels x modes");
    }
    if (!(step_time_ > 0.0)) {
        throw DomainError("BathSpec: step time must be positive");
    }
}

// ---------------------------------------------------------------------------
// Pointer-ensemble closed forms

CollectivePointer collective_pointer(const PointerEnsemble &ensemble) {
    require_ensemble_size(ensemble, "collective_pointer");
    const auto &p = ensemble.pointers();
    const auto m = static_cast<Eigen::Index>(ensemble.marked_index());
    Eigen::VectorXcd sum = p.colwise().sum().transpose() - p.row(m).transpose();
    sum /= std::sqrt(static_cast<double>(ensemble.size() - 1));
    const double norm2 = sum.squaredNorm();
    return {std::move(sum), norm2};
}

DecoherenceFactors decoherence_factors(const PointerEnsemble &ensemble) {
    require_ensemble_size(ensemble, "decoherence_factors");
    const auto n = static_cast<std::int64_t>(ensemble.size());
    const CollectivePointer d = collective_pointer(ensemble);
    const Eigen::VectorXcd e_m = ensemble.pointer(ensemble.marked_index());

    const double f1 = (d.squared_norm - 1.0) / static_cast<double>(n - 2);
    // (<d|e_m> + <e_m|d>) / 2 is the real part; any imaginary part drops out.
    const double f2 =
        d.vector.dot(e_m).real() / std::sqrt(static_cast<double>(n - 1));

    if (DecoherenceFactors::bound_violation(n, f1, f2) > kBoundSlack) {
        throw std::logic_error("decoherence_factors: bounds violated by a "
                               "sub-normalised ensemble");
    }
    return {n, f1, f2, FactorSource::Ensemble};
}

double decohered_probability(std::int64_t n, Steps steps,
                             const DecoherenceFactors &factors) {
    require_register(n, 3, "decohered_probability");
    require_steps(steps, "decohered_probability");
    if (DecoherenceFactors::bound_violation(n, factors.f1(), factors.f2()) >
        kBoundSlack) {
        throw DomainError("decohered_probability: factors out of bounds for n");
    }
    const SearchAngle angle = SearchAngle::from_size(n);
    const double theta = angle.theta();
    const auto l = static_cast<double>(steps);
    const double f1 = factors.f1();
    const double f2 = factors.f2();

    const double p = f1 * sin_squared((2.0 * l + 1.0) * theta) +
                     (1.0 - f1) / static_cast<double>(n) +
                     0.5 * (f2 - f1) * std::sin(2.0 * theta) *
                         std::sin(4.0 * l * theta);
    if (p < -kProbabilitySlack || p > 1.0 + kProbabilitySlack) {
        throw DomainError("decohered_probability: factors not realisable by "
                          "any pointer ensemble at this step count");
    }
    return std::clamp(p, 0.0, 1.0);
}

double partial_trace_expansion(std::int64_t n, Steps steps,
                               const DecoherenceFactors &factors) {
    require_register(n, 3, "partial_trace_expansion");
    require_steps(steps, "partial_trace_expansion");
    const double theta = SearchAngle::from_size(n).theta();
    const auto nn = static_cast<double>(n);
    const double x = 2.0 * static_cast<double>(steps) * theta;
    const double c = std::cos(x);
    const double s = std::sin(x);
    return (c * c + ((nn - 2.0) * factors.f1() + 1.0) * s * s +
            std::sqrt(nn - 1.0) * factors.f2() * std::sin(2.0 * x)) /
           nn;
}

double necoherence_probability(std::int64_t n, Steps steps) {
    require_register(n, 3, "necoherence_probability");
    require_steps(steps, "necoherence_probability");
    const double theta = SearchAngle::from_size(n).theta();
    const double c = std::cos(2.0 * static_cast<double>(steps) * theta);
    return c * c / static_cast<double>(n);
}

double minimal_coupling_probability(std::int64_t n, Steps steps,
                                    const MinimalCouplingParams &params) {
    require_register(n, 2, "minimal_coupling_probability");
    require_steps(steps, "minimal_coupling_probability");
    const double theta = SearchAngle::from_size(n).theta();
    const double r = params.r();
    return 0.5 * (1.0 - r) +
           r * sin_squared((2.0 * static_cast<double>(steps) + 1.0) * theta +
                           params.delta());
}

// ---------------------------------------------------------------------------
// Harmonic bath

namespace {

double bath_exponent(const BathSpec &bath, std::size_t k, std::size_t k_prime,
                     Steps steps) {
    if (k >= bath.levels() || k_prime >= bath.levels()) {
        throw DomainError("bath_factor_norm: level index out of range");
    }
    require_steps(steps, "bath_factor_norm");
    const auto &w = bath.frequencies();
    const auto gk = bath.couplings().row(static_cast<Eigen::Index>(k));
    const auto gkp = bath.couplings().row(static_cast<Eigen::Index>(k_prime));
    const double t = static_cast<double>(steps) * bath.step_time();
    double exponent = 0.0;
    for (Eigen::Index j = 0; j < w.size(); ++j) {
        const double dg2 = std::norm(gk[j] - gkp[j]);
        exponent += 2.0 * dg2 / (w[j] * w[j]) * sin_squared(0.5 * w[j] * t);
    }
    return exponent;
}

} // namespace

double bath_factor_norm(const BathSpec &bath, std::size_t k,
                        std::size_t k_prime, Steps steps) {
    return std::exp(-bath_exponent(bath, k, k_prime, steps));
}

DecayFit fit_decoherence_rate(const BathSpec &bath, std::size_t k,
                              std::size_t k_prime, Steps max_steps) {
    if (max_steps < 2) {
        throw DomainError("fit_decoherence_rate: need at least 2 steps");
    }
    std::vector<double> x;
    std::vector<double> y;
    x.reserve(static_cast<std::size_t>(max_steps));
    y.reserve(static_cast<std::size_t>(max_steps));
    for (Steps l = 1; l <= max_steps; ++l) {
        x.push_back(static_cast<double>(l) * bath.step_time());
        y.push_back(bath_exponent(bath, k, k_prime, l));
    }

    const double total = y.back();
    const double scale = *std::max_element(y.begin(), y.end());
    if (scale == 0.0) {
        return {0.0, 0.0, max_steps};
    }

    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += x[i] * y[i];
        sxx += x[i] * x[i];
    }
    const double gamma = sxy / sxx;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - gamma * x[i];
        ss += r * r;
    }
    const double rms = std::sqrt(ss / static_cast<double>(x.size()));
    const double residual = total > 0.0 ? rms / total : rms / scale;

    const double slack = 1e-12 * scale;
    for (std::size_t i = 1; i < y.size(); ++i) {
        if (y[i] < y[i - 1] - slack) {
            throw FitUnreliableError(
                "fit_decoherence_rate: |F| recurs within the window (l = " +
                    std::to_string(i + 1) + ")",
                residual);
        }
    }
    return {gamma, residual, max_steps};
}

std::optional<Steps> max_effective_steps(double gamma, double t0,
                                         double floor) {
    if (!(gamma >= 0.0) || !(t0 > 0.0) || !(floor > 0.0 && floor < 1.0)) {
        throw DomainError("max_effective_steps: need gamma >= 0, t0 > 0, "
                          "0 < floor < 1");
    }
    if (gamma == 0.0) {
        return std::nullopt;
    }
    // Relative slack so that an exact boundary (e.g. gamma t0 = 0.01 with
    // floor = 1/e) is not lost to rounding in the division.
    const double budget = -std::log(floor) / (gamma * t0);
    return static_cast<Steps>(std::floor(budget * (1.0 + 1e-12)));
}

} // namespace su2search
