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
#include "su2search/grover_fullstate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "su2search/errors.hpp"

namespace su2search {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kAxisTol = 1e-8;

void flip_marked(Eigen::Ref<Eigen::VectorXcd> v, const MarkedSet &marked) {
    for (const std::size_t k : marked.indices()) {
        v[static_cast<Eigen::Index>(k)] = -v[static_cast<Eigen::Index>(k)];
    }
}

void reflect_in_place(Eigen::Ref<Eigen::VectorXcd> v,
                      const Eigen::VectorXcd &axis) {
    const std::complex<double> overlap = axis.dot(v); // <axis|v>
    v = 2.0 * overlap * axis - v;
}

void require_dimension(std::size_t got, std::size_t want, const char *what) {
    if (got != want) {
        throw DomainError(std::string(what) + ": dimension mismatch (" +
                          std::to_string(got) + " vs " +
                          std::to_string(want) + ")");
    }
}

} // namespace

StateVector::StateVector(Eigen::VectorXcd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() == 0) {
        throw DomainError("StateVector: empty amplitude vector");
    }
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTol) {
        throw DomainError("StateVector: not normalised (norm^2 = " +
                          std::to_string(norm2) + ")");
    }
}

MarkedSet::MarkedSet(std::vector<std::size_t> indices)
    : indices_(std::move(indices)) {
    if (indices_.empty()) {
        throw DomainError("MarkedSet: at least one marked index required");
    }
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) !=
        indices_.end()) {
        throw DomainError("MarkedSet: duplicate marked index");
    }
}

bool MarkedSet::contains(std::size_t k) const {
    return std::binary_search(indices_.begin(), indices_.end(), k);
}

void MarkedSet::check_against(std::size_t n) const {
    if (indices_.back() >= n) {
        throw DomainError("MarkedSet: index " +
                          std::to_string(indices_.back()) +
                          " out of range for dimension " + std::to_string(n));
    }
    if (indices_.size() >= n) {
        throw DomainError("MarkedSet: need at least one unmarked index");
    }
}

StateVector uniform_state(std::int64_t n) {
    if (n < 2) {
        throw DomainError("uniform_state: n must be at least 2");
    }
    return StateVector(Eigen::VectorXcd::Constant(
        n, 1.0 / std::sqrt(static_cast<double>(n))));
}

StateVector marked_superposition(std::size_t n, const MarkedSet &marked) {
    marked.check_against(n);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
    const double a = 1.0 / std::sqrt(static_cast<double>(marked.size()));
    for (const std::size_t k : marked.indices()) {
        v[static_cast<Eigen::Index>(k)] = a;
    }
    return StateVector(std::move(v));
}

StateVector basis_state(std::size_t n, std::size_t k) {
    if (k >= n) {
        throw DomainError("basis_state: index out of range");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
    v[static_cast<Eigen::Index>(k)] = 1.0;
    return StateVector(std::move(v));
}

StateVector reflect_marked(const StateVector &state, const MarkedSet &marked) {
    if (marked.indices().back() >= state.dimension()) {
        throw DomainError("reflect_marked: marked index out of range");
    }
    Eigen::VectorXcd v = state.amplitudes();
    flip_marked(v, marked);
    return StateVector(std::move(v));
}

StateVector reflect_about(const StateVector &state, const StateVector &axis) {
    require_dimension(state.dimension(), axis.dimension(), "reflect_about");
    if (std::abs(axis.amplitudes().norm() - 1.0) > kAxisTol) {
        throw DomainError("reflect_about: axis is not normalised");
    }
    Eigen::VectorXcd v = state.amplitudes();
    reflect_in_place(v, axis.amplitudes());
    return StateVector(std::move(v));
}

StateVector grover_step(const StateVector &state, const MarkedSet &marked,
                        const StateVector &axis) {
    return reflect_about(reflect_marked(state, marked), axis);
}

double marked_probability(const StateVector &state, const MarkedSet &marked) {
    double p = 0.0;
    for (const std::size_t k : marked.indices()) {
        p += std::norm(state[k]);
    }
    return p;
}

void apply_search_iterates(Eigen::Ref<Eigen::MatrixXcd> columns,
                           const MarkedSet &marked, const StateVector &axis,
                           Steps steps) {
    if (steps < 0) {
        throw DomainError("apply_search_iterates: negative step count");
    }
    require_dimension(static_cast<std::size_t>(columns.rows()),
                      axis.dimension(), "apply_search_iterates");
    marked.check_against(axis.dimension());
    for (Eigen::Index j = 0; j < columns.cols(); ++j) {
        for (Steps l = 0; l < steps; ++l) {
            flip_marked(columns.col(j), marked);
            reflect_in_place(columns.col(j), axis.amplitudes());
        }
    }
}

std::vector<double> run_search(std::int64_t n, const MarkedSet &marked,
                               const StateVector &axis, Steps steps) {
    if (steps < 0) {
        throw DomainError("run_search: negative step count");
    }
    if (n < 2) {
        throw DomainError("run_search: n must be at least 2");
    }
    require_dimension(axis.dimension(), static_cast<std::size_t>(n),
                      "run_search");
    marked.check_against(static_cast<std::size_t>(n));

    std::vector<double> trace;
    trace.reserve(static_cast<std::size_t>(steps) + 1);
    Eigen::VectorXcd v = axis.amplitudes();
    const auto probability = [&] {
        double p = 0.0;
        for (const std::size_t k : marked.indices()) {
            p += std::norm(v[static_cast<Eigen::Index>(k)]);
        }
        return p;
    };
    trace.push_back(probability());
    for (Steps l = 0; l < steps; ++l) {
        flip_marked(v, marked);
        reflect_in_place(v, axis.amplitudes());
        trace.push_back(probability());
    }
    return trace;
}

} // namespace su2search
