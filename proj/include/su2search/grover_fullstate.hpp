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
 * Dense simulation of the search on the full N-dimensional Hilbert space.
 *
 * Nothing here uses the two-dimensional reduction: every step is the literal
 * composition of the marked-state sign flip and the reflection about the
 * initial state, applied to all N amplitudes.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "su2search/su2_core.hpp"

namespace su2search {

/// Normalised dense amplitude vector.
class StateVector {
  public:
    /// Throws DomainError unless sum |a_k|^2 = 1 within 1e-10.
    explicit StateVector(Eigen::VectorXcd amplitudes);

    [[nodiscard]] std::size_t dimension() const noexcept {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    [[nodiscard]] const Eigen::VectorXcd &amplitudes() const noexcept {
        return amplitudes_;
    }
    [[nodiscard]] std::complex<double> operator[](std::size_t k) const {
        return amplitudes_[static_cast<Eigen::Index>(k)];
    }

  private:
    Eigen::VectorXcd amplitudes_;
};

/// Sorted set of distinct marked basis indices.
class MarkedSet {
  public:
    /// Sorts the input; throws DomainError if empty or if an index repeats.
    explicit MarkedSet(std::vector<std::size_t> indices);

    [[nodiscard]] static MarkedSet single(std::size_t index) {
        return MarkedSet({index});
    }

    [[nodiscard]] std::span<const std::size_t> indices() const noexcept {
        return indices_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
    [[nodiscard]] bool contains(std::size_t k) const;

    /// Throws DomainError unless every index is < n and size() < n.
    void check_against(std::size_t n) const;

  private:
    std::vector<std::size_t> indices_;
};

[[nodiscard]] StateVector uniform_state(std::int64_t n);

/// Uniform superposition over the marked indices.
[[nodiscard]] StateVector marked_superposition(std::size_t n,
                                               const MarkedSet &marked);

/// Computational basis state |k>.
[[nodiscard]] StateVector basis_state(std::size_t n, std::size_t k);

/// 1 - 2 sum_{k in marked} |k><k|
[[nodiscard]] StateVector reflect_marked(const StateVector &state,
                                         const MarkedSet &marked);

/// 2 |axis><axis| - 1
[[nodiscard]] StateVector reflect_about(const StateVector &state,
                                        const StateVector &axis);

/// reflect_about(reflect_marked(state, marked), axis)
[[nodiscard]] StateVector grover_step(const StateVector &state,
                                      const MarkedSet &marked,
                                      const StateVector &axis);

/// Total marked probability after l = 0..steps iterations started from
/// axis. Entry 0 is the initial marked probability.
[[nodiscard]] std::vector<double> run_search(std::int64_t n,
                                             const MarkedSet &marked,
                                             const StateVector &axis,
                                             Steps steps);

[[nodiscard]] double marked_probability(const StateVector &state,
                                        const MarkedSet &marked);

/// Applies the search iterate steps times, in place, to each column.
/// The map is linear, so columns need not be normalised; this is the form
/// used to push whole families of vectors (e.g. an environment-tagged
/// register) through the iterate.
void apply_search_iterates(Eigen::Ref<Eigen::MatrixXcd> columns,
                           const MarkedSet &marked, const StateVector &axis,
                           Steps steps);

} // namespace su2search
