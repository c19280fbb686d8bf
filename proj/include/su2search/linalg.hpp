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
#pragma once

#include <complex>

#include <Eigen/Dense>

namespace su2search::linalg {

using Complex = std::complex<double>;

[[nodiscard]] bool is_hermitian(const Eigen::MatrixXcd &h, double tol = 1e-12);

/// Spectral decomposition of a Hermitian matrix, kept so that exp(-i t H)
/// can be evaluated at many times for the cost of one diagonalisation.
class HermitianSpectrum {
  public:
    explicit HermitianSpectrum(const Eigen::MatrixXcd &h);

    /// exp(-i t H)
    [[nodiscard]] Eigen::MatrixXcd propagator(double t) const;

    /// exp(-i t H) v, without forming the full propagator.
    [[nodiscard]] Eigen::VectorXcd evolve(const Eigen::VectorXcd &v,
                                          double t) const;

    [[nodiscard]] const Eigen::VectorXd &eigenvalues() const noexcept {
        return values_;
    }

  private:
    Eigen::VectorXd values_;
    Eigen::MatrixXcd vectors_;
};

/// exp(-i t H) for Hermitian H. Throws DomainError if H is not Hermitian.
[[nodiscard]] Eigen::MatrixXcd hermitian_propagator(const Eigen::MatrixXcd &h,
                                                    double t);

} // namespace su2search::linalg
