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
 * Brute-force register (x) environment simulations.
 *
 * These build the joint state explicitly and trace the environment out, or
 * integrate the joint Schroedinger equation by exact diagonalisation. They
 * share no formulas with decoherence_models.hpp and serve as its oracle.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "su2search/decoherence_models.hpp"
#include "su2search/grover_fullstate.hpp"
#include "su2search/linalg.hpp"
#include "su2search/su2_core.hpp"

namespace su2search {

/// Joint amplitudes psi[a, d], register index a by environment index d.
class EntangledState {
  public:
    /// Throws DomainError unless the global norm is 1 within 1e-10.
    explicit EntangledState(Eigen::MatrixXcd amplitudes);

    [[nodiscard]] const Eigen::MatrixXcd &amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] std::size_t system_dimension() const noexcept {
        return static_cast<std::size_t>(amplitudes_.rows());
    }
    [[nodiscard]] std::size_t env_dimension() const noexcept {
        return static_cast<std::size_t>(amplitudes_.cols());
    }

    /// Number of non-negligible Schmidt coefficients (singular values above
    /// tol times the largest).
    [[nodiscard]] std::size_t schmidt_rank(double tol = 1e-10) const;

  private:
    Eigen::MatrixXcd amplitudes_;
};

/// Register density matrix. Construction checks Hermiticity, unit trace and
/// eigenvalues >= -1e-10 (the last costs one N x N diagonalisation).
class ReducedDensity {
  public:
    explicit ReducedDensity(Eigen::MatrixXcd matrix);

    [[nodiscard]] const Eigen::MatrixXcd &matrix() const noexcept {
        return matrix_;
    }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(matrix_.rows());
    }

  private:
    Eigen::MatrixXcd matrix_;
};

/// (1/sqrt n) sum_k (S^l |k>) (x) |e_k>, S^l applied by full-space iteration
/// with axis = uniform state. Pointers must be unit vectors.
[[nodiscard]] EntangledState entangle_then_search(std::int64_t n,
                                                  std::size_t marked,
                                                  const PointerEnsemble &ensemble,
                                                  Steps steps);

/// rho = Tr_env |psi><psi|
[[nodiscard]] ReducedDensity reduce(const EntangledState &state);

[[nodiscard]] double marked_probability(const ReducedDensity &rho,
                                        std::size_t marked);

/// <m|rho|m> evaluated directly from the joint amplitudes, for registers too
/// large to hold rho.
[[nodiscard]] double marked_probability(const EntangledState &state,
                                        std::size_t marked);

// ---------------------------------------------------------------------------
// Minimal coupling: register confined to the search plane, environment of
// dimension D coupled through the branch projectors of H0.
//
// The branch states are the eigenvectors of H0 = i(2 theta/t0)(|m><c| - |c><m|)
//   |+> = (|m> - i|c>)/sqrt 2   (eigenvalue +2 theta/t0)
//   |-> = (|m> + i|c>)/sqrt 2   (eigenvalue -2 theta/t0)
// With this labelling the exact marked probability is
//   (1-r)/2 + r sin^2((2l+1) theta + delta),  <e_+|e_-> = r e^{2 i delta}.

/// Plane vector of the branch state with H0 eigenvalue sign * 2 theta/t0.
[[nodiscard]] Eigen::Vector2cd branch_state(int sign);

/// exp(-i t H_T) |psi>(x)|env_initial> with
/// H_T = H0 (x) 1 + |+><+| (x) h_plus + |-><-| (x) h_minus, t = steps t0.
/// Returns the marked-state probability.
[[nodiscard]] double minimal_coupling_evolve(const SearchAngle &angle,
                                             const Eigen::MatrixXcd &h_plus,
                                             const Eigen::MatrixXcd &h_minus,
                                             const Eigen::VectorXcd &env_initial,
                                             double t0, Steps steps);

/// <e_+|e_-> with |e_+-> = exp(-i t h_+-)|env_initial>.
[[nodiscard]] std::complex<double>
branch_pointer_overlap(const Eigen::MatrixXcd &h_plus,
                       const Eigen::MatrixXcd &h_minus,
                       const Eigen::VectorXcd &env_initial, double t);

/// D = 2 generators (h_plus, h_minus) whose branch pointers started from
/// (1, 0) reach <e_+|e_-> = r e^{2 i delta} exactly at time t > 0.
[[nodiscard]] std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd>
tuned_branch_generators(const MinimalCouplingParams &params, double t);

// ---------------------------------------------------------------------------
// Harmonic dephasing bath in a truncated Fock basis.

/// Per-mode Fock truncation of the bath. For register level k each mode j
/// evolves under omega_j a^dag a + g_jk a + conj(g_jk) a^dag; the modes do
/// not interact, so conditional bath states are products over modes and
/// each mode is simulated in its own (n_max + 1)-dimensional space.
class OscillatorEnvironment {
  public:
    static constexpr int kDefaultCutoff = 40;
    static constexpr double kLeakageLimit = 1e-8;

    OscillatorEnvironment(Eigen::VectorXd frequencies,
                          Eigen::MatrixXcd couplings,
                          int n_max = kDefaultCutoff);
    explicit OscillatorEnvironment(const BathSpec &bath,
                                   int n_max = kDefaultCutoff);

    [[nodiscard]] int cutoff() const noexcept { return n_max_; }
    [[nodiscard]] std::size_t modes() const noexcept {
        return static_cast<std::size_t>(frequencies_.size());
    }
    [[nodiscard]] std::size_t levels() const noexcept {
        return static_cast<std::size_t>(couplings_.rows());
    }

    /// Vacuum of mode j evolved for time t conditioned on level k.
    [[nodiscard]] Eigen::VectorXcd conditional_mode_state(std::size_t k,
                                                          std::size_t mode,
                                                          double t) const;

  private:
    Eigen::VectorXd frequencies_;
    Eigen::MatrixXcd couplings_;
    int n_max_;
    std::vector<linalg::HermitianSpectrum> spectra_; // [k * modes + j]
};

/// <e_k|e_k'> after time steps * t0. Throws TruncationError if the top Fock
/// level of any conditional mode state holds population >= 1e-8.
[[nodiscard]] std::complex<double>
oscillator_overlap(const OscillatorEnvironment &env, std::size_t k,
                   std::size_t k_prime, Steps steps, double t0);

} // namespace su2search
