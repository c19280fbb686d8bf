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
 * Closed forms for a search register entangled with an environment.
 *
 * The environment enters through its pointer states |e_k>, the state it is
 * left in when the register sits in basis state |k>. Only two numbers built
 * from them reach the marked-state probability:
 *
 *   |d> = (N-1)^{-1/2} sum_{k != m} |e_k>
 *   F1  = (<d|d> - 1) / (N - 2)
 *   F2  = Re <d|e_m> / sqrt(N - 1)
 *
 * and the success probability after l steps is
 *
 *   P = F1 sin^2((2l+1)theta) + (1 - F1)/N
 *       + (F2 - F1)/2 sin(2 theta) sin(4 l theta).
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>

#include <Eigen/Dense>

#include "su2search/random.hpp"
#include "su2search/su2_core.hpp"

namespace su2search {

/// Environment states |e_k>, one row per register basis state.
class PointerEnsemble {
  public:
    /// Rows are pointers. Throws DomainError if any row has norm > 1 + 1e-10
    /// or marked_index is out of range.
    PointerEnsemble(Eigen::MatrixXcd pointers, std::size_t marked_index);

    /// Every pointer equal to the first environment basis vector.
    [[nodiscard]] static PointerEnsemble identical(std::size_t n,
                                                   std::size_t env_dim,
                                                   std::size_t marked_index);
    /// |e_k> = k-th environment basis vector; needs env_dim >= n.
    [[nodiscard]] static PointerEnsemble orthonormal(std::size_t n,
                                                     std::size_t env_dim,
                                                     std::size_t marked_index);
    /// Unmarked pointers carry the (N-1)-th roots of unity on a common
    /// vector, so |d> = 0. The marked pointer is the bare common vector.
    [[nodiscard]] static PointerEnsemble
    phase_matched(std::size_t n, std::size_t env_dim, std::size_t marked_index);
    /// Independent Haar-random unit pointers.
    [[nodiscard]] static PointerEnsemble random(std::size_t n,
                                                std::size_t env_dim,
                                                std::size_t marked_index,
                                                Rng &rng);

    [[nodiscard]] std::size_t size() const noexcept {
        return static_cast<std::size_t>(pointers_.rows());
    }
    [[nodiscard]] std::size_t env_dimension() const noexcept {
        return static_cast<std::size_t>(pointers_.cols());
    }
    [[nodiscard]] std::size_t marked_index() const noexcept { return marked_; }
    [[nodiscard]] const Eigen::MatrixXcd &pointers() const noexcept {
        return pointers_;
    }
    [[nodiscard]] Eigen::VectorXcd pointer(std::size_t k) const {
        return pointers_.row(static_cast<Eigen::Index>(k)).transpose();
    }

    /// True if every pointer has unit norm within tol.
    [[nodiscard]] bool unit_norm(double tol = 1e-10) const;

  private:
    Eigen::MatrixXcd pointers_;
    std::size_t marked_;
};

struct CollectivePointer {
    Eigen::VectorXcd vector;
    double squared_norm;
};

enum class FactorSource { Ensemble, Specified };

/// The pair (F1, F2) together with the register size they belong to.
class DecoherenceFactors {
  public:
    /// Validates -1/(n-2) <= f1 <= 1 and |f2| <= 1 (1e-12 slack).
    [[nodiscard]] static DecoherenceFactors specified(std::int64_t n, double f1,
                                                      double f2);
    [[nodiscard]] static DecoherenceFactors ideal(std::int64_t n) {
        return specified(n, 1.0, 1.0);
    }
    [[nodiscard]] static DecoherenceFactors classical(std::int64_t n) {
        return specified(n, 0.0, 0.0);
    }
    [[nodiscard]] static DecoherenceFactors necoherent(std::int64_t n);

    [[nodiscard]] double f1() const noexcept { return f1_; }
    [[nodiscard]] double f2() const noexcept { return f2_; }
    [[nodiscard]] std::int64_t size() const noexcept { return n_; }
    [[nodiscard]] FactorSource source() const noexcept { return source_; }

    /// Amount by which (f1, f2) violate the bounds for size n; 0 if inside.
    [[nodiscard]] static double bound_violation(std::int64_t n, double f1,
                                                double f2);

  private:
    friend DecoherenceFactors decoherence_factors(const PointerEnsemble &);
    DecoherenceFactors(std::int64_t n, double f1, double f2, FactorSource src)
        : n_(n), f1_(f1), f2_(f2), source_(src) {}

    std::int64_t n_;
    double f1_;
    double f2_;
    FactorSource source_;
};

/// Overlap <e_+|e_-> = r e^{2 i delta} of the two branch pointers.
class MinimalCouplingParams {
  public:
    /// r in [0, 1].
    MinimalCouplingParams(double r, double delta);

    /// r = |z|, delta = arg(z)/2. |z| may exceed 1 by 1e-10 (clamped).
    [[nodiscard]] static MinimalCouplingParams
    from_overlap(std::complex<double> overlap);

    [[nodiscard]] double r() const noexcept { return r_; }
    [[nodiscard]] double delta() const noexcept { return delta_; }

  private:
    double r_;
    double delta_;
};

/// Harmonic bath: frequencies omega_j and couplings g_{jk}, stored as a
/// levels x modes matrix (row k holds g_{.k}).
class BathSpec {
  public:
    BathSpec(Eigen::VectorXd frequencies, Eigen::MatrixXcd couplings,
             double step_time);

    [[nodiscard]] const Eigen::VectorXd &frequencies() const noexcept {
        return frequencies_;
    }
    [[nodiscard]] const Eigen::MatrixXcd &couplings() const noexcept {
        return couplings_;
    }
    [[nodiscard]] double step_time() const noexcept { return step_time_; }
    [[nodiscard]] std::size_t modes() const noexcept {
        return static_cast<std::size_t>(frequencies_.size());
    }
    [[nodiscard]] std::size_t levels() const noexcept {
        return static_cast<std::size_t>(couplings_.rows());
    }

  private:
    Eigen::VectorXd frequencies_;
    Eigen::MatrixXcd couplings_;
    double step_time_;
};

struct DecayFit {
    double gamma;    ///< fitted rate, inverse time units
    double residual; ///< RMS misfit of -ln|F| divided by the decay at window end
    Steps window;    ///< fit used l = 1..window
};

[[nodiscard]] CollectivePointer
collective_pointer(const PointerEnsemble &ensemble);

[[nodiscard]] DecoherenceFactors
decoherence_factors(const PointerEnsemble &ensemble);

/// Success probability with the environment folded into (F1, F2).
/// Throws DomainError when the factors break their bounds for n, or when
/// the combination yields a value outside [0, 1] (no ensemble realises it).
[[nodiscard]] double decohered_probability(std::int64_t n, Steps steps,
                                           const DecoherenceFactors &factors);

/// Same quantity written as the direct expansion of <m|rho|m>:
/// (1/N)[cos^2 2l theta + ((N-2)F1 + 1) sin^2 2l theta
///       + sqrt(N-1) F2 sin 4l theta].
[[nodiscard]] double partial_trace_expansion(std::int64_t n, Steps steps,
                                             const DecoherenceFactors &factors);

/// cos^2(2 l theta) / N, the |d> = 0 limit.
[[nodiscard]] double necoherence_probability(std::int64_t n, Steps steps);

/// (1 - r)/2 + r sin^2((2l+1) theta + delta)
[[nodiscard]] double
minimal_coupling_probability(std::int64_t n, Steps steps,
                             const MinimalCouplingParams &params);

/// Zero-temperature |F_{k,k'}| after l steps:
/// exp{-sum_j 2 |g_jk - g_jk'|^2 / omega_j^2 sin^2(omega_j l t0 / 2)}.
[[nodiscard]] double bath_factor_norm(const BathSpec &bath, std::size_t k,
                                      std::size_t k_prime, Steps steps);

/// Least-squares rate gamma for |F| ~ exp(-gamma l t0), fitted through the
/// origin over l = 1..max_steps. Throws FitUnreliableError if |F| does not
/// decay monotonically over the window.
[[nodiscard]] DecayFit fit_decoherence_rate(const BathSpec &bath,
                                            std::size_t k, std::size_t k_prime,
                                            Steps max_steps);

inline constexpr double kDefaultCoherenceFloor = 1.0 / std::numbers::e;

/// Largest l with exp(-gamma l t0) >= floor; nullopt (unbounded) if gamma=0.
[[nodiscard]] std::optional<Steps>
max_effective_steps(double gamma, double t0,
                    double floor = kDefaultCoherenceFloor);

} // namespace su2search
