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
#include "su2search/environment_oracle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "su2search/errors.hpp"

namespace su2search {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kDensityTol = 1e-10;

using namespace std::complex_literals;

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
        }
    }
    return out;
}

} // namespace

EntangledState::EntangledState(Eigen::MatrixXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw DomainError("EntangledState: empty state");
    }
    if (std::abs(amplitudes_.squaredNorm() - 1.0) > kNormTol) {
        throw DomainError("EntangledState: joint state is not normalised");
    }
}

std::size_t EntangledState::schmidt_rank(double tol) const {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(amplitudes_);
    const Eigen::VectorXd &s = svd.singularValues();
    const double cut = tol * s[0];
    return static_cast<std::size_t>((s.array() > cut).count());
}

ReducedDensity::ReducedDensity(Eigen::MatrixXcd matrix)
    : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.size() == 0) {
        throw DomainError("ReducedDensity: matrix must be square");
    }
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kDensityTol) {
        throw DomainError("ReducedDensity: not Hermitian");
    }
    if (std::abs(matrix_.trace() - 1.0) > kDensityTol) {
        throw DomainError("ReducedDensity: trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        matrix_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kDensityTol) {
        throw DomainError("ReducedDensity: negative eigenvalue");
    }
}

EntangledState entangle_then_search(std::int64_t n, std::size_t marked,
                                    const PointerEnsemble &ensemble,
                                    Steps steps) {
    if (n < 2 || static_cast<std::size_t>(n) != ensemble.size()) {
        throw DomainError("entangle_then_search: ensemble size must equal n");
    }
    if (marked != ensemble.marked_index()) {
        throw DomainError("entangle_then_search: marked index disagrees with "
                          "the ensemble");
    }
    if (!ensemble.unit_norm(kNormTol)) {
        throw DomainError("entangle_then_search: pointers must be unit vectors");
    }
    // Column d of psi is (1/sqrt n) S^l applied to column d of the pointer
    // table: psi = (1/sqrt n) S^l E with E[k, d] = <d|e_k>.
    Eigen::MatrixXcd psi =
        ensemble.pointers() / std::sqrt(static_cast<double>(n));
    apply_search_iterates(psi, MarkedSet::single(marked), uniform_state(n),
                          steps);
    return EntangledState(std::move(psi));
}

ReducedDensity reduce(const EntangledState &state) {
    const auto &psi = state.amplitudes();
    Eigen::MatrixXcd rho = psi * psi.adjoint();
    return ReducedDensity(std::move(rho));
}

double marked_probability(const ReducedDensity &rho, std::size_t marked) {
    if (marked >= rho.dimension()) {
        throw DomainError("marked_probability: index out of range");
    }
    const auto m = static_cast<Eigen::Index>(marked);
    return std::clamp(rho.matrix()(m, m).real(), 0.0, 1.0);
}

double marked_probability(const EntangledState &state, std::size_t marked) {
    if (marked >= state.system_dimension()) {
        throw DomainError("marked_probability: index out of range");
    }
    return std::clamp(
        state.amplitudes().row(static_cast<Eigen::Index>(marked)).squaredNorm(),
        0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Minimal coupling

Eigen::Vector2cd branch_state(int sign) {
    if (sign != 1 && sign != -1) {
        throw DomainError("branch_state: sign must be +1 or -1");
    }
    const double h = std::numbers::sqrt2 / 2.0;
    return {h, -static_cast<double>(sign) * 1i * h};
}

double minimal_coupling_evolve(const SearchAngle &angle,
                               const Eigen::MatrixXcd &h_plus,
                               const Eigen::MatrixXcd &h_minus,
                               const Eigen::VectorXcd &env_initial, double t0,
                               Steps steps) {
    const Eigen::Index d = env_initial.size();
    if (d == 0 || h_plus.rows() != d || h_plus.cols() != d ||
        h_minus.rows() != d || h_minus.cols() != d) {
        throw DomainError("minimal_coupling_evolve: generator dimensions must "
                          "match the environment state");
    }
    if (!linalg::is_hermitian(h_plus) || !linalg::is_hermitian(h_minus)) {
        throw DomainError("minimal_coupling_evolve: generators must be "
                          "Hermitian");
    }
    if (std::abs(env_initial.norm() - 1.0) > kNormTol) {
        throw DomainError("minimal_coupling_evolve: environment state must be "
                          "normalised");
    }
    if (steps < 0) {
        throw DomainError("minimal_coupling_evolve: negative step count");
    }

    const Eigen::Matrix2cd h0 = generator_hamiltonian(angle, t0);
    const Eigen::Vector2cd plus = branch_state(+1);
    const Eigen::Vector2cd minus = branch_state(-1);
    const Eigen::Matrix2cd p_plus = plus * plus.adjoint();
    const Eigen::Matrix2cd p_minus = minus * minus.adjoint();

    const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(d, d);
    const Eigen::MatrixXcd h_total = kron(h0, identity) +
                                     kron(p_plus, h_plus) +
                                     kron(p_minus, h_minus);

    Eigen::Vector2cd psi_plane(angle.sin_theta(), std::cos(angle.theta()));
    const Eigen::VectorXcd psi0 = kron(psi_plane, env_initial);
    const double t = static_cast<double>(steps) * t0;
    const Eigen::VectorXcd psi_t =
        linalg::HermitianSpectrum(h_total).evolve(psi0, t);

    // Plane index 0 is the marked state; its block is psi_t[0 .. d).
    return std::clamp(psi_t.head(d).squaredNorm(), 0.0, 1.0);
}

std::complex<double>
branch_pointer_overlap(const Eigen::MatrixXcd &h_plus,
                       const Eigen::MatrixXcd &h_minus,
                       const Eigen::VectorXcd &env_initial, double t) {
    const Eigen::VectorXcd e_plus =
        linalg::HermitianSpectrum(h_plus).evolve(env_initial, t);
    const Eigen::VectorXcd e_minus =
        linalg::HermitianSpectrum(h_minus).evolve(env_initial, t);
    return e_plus.dot(e_minus);
}

std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd>
tuned_branch_generators(const MinimalCouplingParams &params, double t) {
    if (!(t > 0.0)) {
        throw DomainError("tuned_branch_generators: need t > 0");
    }
    // exp(-i t h_plus)(1,0) = e^{-2i delta}(r, -i sqrt(1-r^2)); h_minus = 0.
    const double mix = std::acos(params.r());
    Eigen::MatrixXcd h_plus(2, 2);
    h_plus << 2.0 * params.delta(), mix, mix, 2.0 * params.delta();
    h_plus /= t;
    return {h_plus, Eigen::MatrixXcd::Zero(2, 2)};
}

// ---------------------------------------------------------------------------
// Oscillator bath

OscillatorEnvironment::OscillatorEnvironment(Eigen::VectorXd frequencies,
                                             Eigen::MatrixXcd couplings,
                                             int n_max)
    : frequencies_(std::move(frequencies)), couplings_(std::move(couplings)),
      n_max_(n_max) {
    if (n_max_ < 1) {
        throw DomainError("OscillatorEnvironment: cutoff must be >= 1");
    }
    if (frequencies_.size() < 1 || !(frequencies_.array() > 0.0).all()) {
        throw DomainError("OscillatorEnvironment: need positive frequencies");
    }
    if (couplings_.cols() != frequencies_.size() || couplings_.rows() < 1) {
        throw DomainError("OscillatorEnvironment: couplings must be levels x "
                          "modes");
    }
    const Eigen::Index dim = n_max_ + 1;
    Eigen::MatrixXcd lower = Eigen::MatrixXcd::Zero(dim, dim); // a
    for (Eigen::Index n = 1; n < dim; ++n) {
        lower(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    const Eigen::MatrixXcd number = lower.adjoint() * lower;

    spectra_.reserve(levels() * modes());
    for (Eigen::Index k = 0; k < couplings_.rows(); ++k) {
        for (Eigen::Index j = 0; j < frequencies_.size(); ++j) {
            const std::complex<double> g = couplings_(k, j);
            const Eigen::MatrixXcd h = frequencies_[j] * number + g * lower +
                                       std::conj(g) * lower.adjoint();
            spectra_.emplace_back(h);
        }
    }
}

OscillatorEnvironment::OscillatorEnvironment(const BathSpec &bath, int n_max)
    : OscillatorEnvironment(bath.frequencies(), bath.couplings(), n_max) {}

Eigen::VectorXcd OscillatorEnvironment::conditional_mode_state(
    std::size_t k, std::size_t mode, double t) const {
    if (k >= levels() || mode >= modes()) {
        throw DomainError("OscillatorEnvironment: index out of range");
    }
    Eigen::VectorXcd vacuum = Eigen::VectorXcd::Zero(n_max_ + 1);
    vacuum[0] = 1.0;
    return spectra_[k * modes() + mode].evolve(vacuum, t);
}

std::complex<double> oscillator_overlap(const OscillatorEnvironment &env,
                                        std::size_t k, std::size_t k_prime,
                                        Steps steps, double t0) {
    if (steps < 0 || !(t0 > 0.0)) {
        throw DomainError("oscillator_overlap: need steps >= 0 and t0 > 0");
    }
    const double t = static_cast<double>(steps) * t0;
    const auto top = static_cast<Eigen::Index>(env.cutoff());
    std::complex<double> overlap = 1.0;
    double leakage = 0.0;
    for (std::size_t j = 0; j < env.modes(); ++j) {
        const Eigen::VectorXcd a = env.conditional_mode_state(k, j, t);
        const Eigen::VectorXcd b = env.conditional_mode_state(k_prime, j, t);
        leakage = std::max({leakage, std::norm(a[top]), std::norm(b[top])});
        overlap *= a.dot(b);
    }
    if (leakage >= OscillatorEnvironment::kLeakageLimit) {
        throw TruncationError("oscillator_overlap: Fock cutoff too small "
                              "(top-level population " +
                                  std::to_string(leakage) + ")",
                              leakage);
    }
    return overlap;
}

} // namespace su2search
