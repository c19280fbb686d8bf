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

#include <stdexcept>
#include <string>

namespace su2search {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A decay-rate fit was requested on a factor that does not decay
/// monotonically over the window.
class FitUnreliableError : public std::runtime_error {
  public:
    FitUnreliableError(const std::string &what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    [[nodiscard]] double residual() const noexcept { return residual_; }

  private:
    double residual_;
};

/// Fock-space truncation too small: the top level picked up population.
class TruncationError : public std::runtime_error {
  public:
    TruncationError(const std::string &what, double leakage)
        : std::runtime_error(what), leakage_(leakage) {}
    [[nodiscard]] double leakage() const noexcept { return leakage_; }

  private:
    double leakage_;
};

/// Invalid experiment configuration (CLI layer).
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace su2search
