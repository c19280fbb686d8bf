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
#include "su2search/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "su2search/errors.hpp"

namespace su2search::linalg {

bool is_hermitian(const Eigen::MatrixXcd &h, double tol) {
    if (h.rows() != h.cols()) {
        return false;
    }
    const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
    return (h - h.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

HermitianSpectrum::HermitianSpectrum(const Eigen::MatrixXcd &h) {
    if (h.size() == 0 || !is_hermitian(h)) {
        throw DomainError("HermitianSpectrum: generator is not Hermitian");
    }
    // Symmetrise so rounding in the caller's construction cannot leak an
    // anti-Hermitian part into the eigensolver.
    const Eigen::MatrixXcd sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("HermitianSpectrum: eigensolver failed");
    }
    values_ = solver.eigenvalues();
    vectors_ = solver.eigenvectors();
}

Eigen::MatrixXcd HermitianSpectrum::propagator(double t) const {
    const Eigen::VectorXcd phases =
        (values_.cast<Complex>() * Complex(0.0, -t)).array().exp();
    return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

Eigen::VectorXcd HermitianSpectrum::evolve(const Eigen::VectorXcd &v,
                                           double t) const {
    const Eigen::VectorXcd phases =
        (values_.cast<Complex>() * Complex(0.0, -t)).array().exp();
    Eigen::VectorXcd coeffs = vectors_.adjoint() * v;
    coeffs.array() *= phases.array();
    return vectors_ * coeffs;
}

Eigen::MatrixXcd hermitian_propagator(const Eigen::MatrixXcd &h, double t) {
    return HermitianSpectrum(h).propagator(t);
}

} // namespace su2search::linalg
