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
#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include <Eigen/Dense>

namespace su2search {

/// Seeded generator with fully specified output.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. The standard library distributions are not, so every transform
/// from raw 64-bit words to doubles is written out here:
///
///   uniform()  = (word >> 11) * 2^-53                      in [0, 1)
///   normal()   = Box-Muller, cos branch only, on u1 = 1 - uniform(),
///                u2 = uniform(); one normal per two words
///   index(n)   = high 64 bits of word * n                  in [0, n)
///
/// Any reimplementation of these three rules with the same seed reproduces
/// every random ensemble and state built by this library bit for bit.
class Rng {
  public:
    static constexpr std::string_view kAlgorithm = "mt19937_64/box-muller-cos/v1";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    [[nodiscard]] double uniform();
    [[nodiscard]] double normal();
    [[nodiscard]] std::complex<double> complex_normal();
    [[nodiscard]] std::size_t index(std::size_t n);

  private:
    std::mt19937_64 engine_;
};

/// Haar-distributed unit vector in C^dim.
[[nodiscard]] Eigen::VectorXcd random_unit_vector(Rng &rng, std::size_t dim);

/// (A + A^dagger) / 2 with A filled by complex normals times scale.
[[nodiscard]] Eigen::MatrixXcd random_hermitian(Rng &rng, std::size_t dim,
                                                double scale = 1.0);

} // namespace su2search
