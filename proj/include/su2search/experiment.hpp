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
 * Experiment driver behind the su2search_cli tool: step sweeps that put
 * every closed form next to its brute-force oracle, and pass/fail
 * cross-checks.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "su2search/decoherence_models.hpp"
#include "su2search/su2_core.hpp"

namespace su2search {

enum class Model {
    Ideal,
    General,
    Multi,
    Decohered,
    Necoherence,
    MinimalCoupling,
    Bath
};
enum class EnsembleKind { Identical, Orthonormal, PhaseMatched, Random };
enum class OutputFormat { Csv, Json };

[[nodiscard]] std::string_view to_string(Model model);
[[nodiscard]] std::string_view to_string(EnsembleKind kind);
/// Throws ConfigError on an unknown name.
[[nodiscard]] Model parse_model(std::string_view name);
[[nodiscard]] EnsembleKind parse_ensemble(std::string_view name);
[[nodiscard]] OutputFormat parse_format(std::string_view name);

inline constexpr std::size_t kDefaultOracleBudget = 100000;

struct ExperimentConfig {
    Model model = Model::Ideal;
    std::int64_t n = 4;
    std::vector<std::size_t> marked{0};
    Steps steps_max = 10;

    // minimal-coupling
    double r = 1.0;
    double delta = 0.0;

    // decohered / necoherence
    EnsembleKind ensemble = EnsembleKind::Random;
    std::optional<std::size_t> env_dim; ///< default depends on the ensemble

    // general: <m|gamma> = amplitude * e^{i phi}
    double amplitude = 0.05;
    double phi = 0.0;

    // bath
    std::optional<BathSpec> bath; ///< default: one mode, omega=1, g=(0, 0.1)
    double t0 = 1.0;
    double coherence_floor = kDefaultCoherenceFloor;
    int fock_cutoff = 40;

    std::uint64_t seed = 0;
    OutputFormat format = OutputFormat::Csv;
    std::size_t oracle_budget = kDefaultOracleBudget;
};

/// Throws ConfigError describing the first invalid parameter.
void validate(const ExperimentConfig &config);

/// Environment dimension actually used by the decohered/necoherence models.
[[nodiscard]] std::size_t effective_env_dim(const ExperimentConfig &config);

/// Amplitudes the oracle would hold; compared against oracle_budget.
[[nodiscard]] std::size_t oracle_amplitudes(const ExperimentConfig &config);

/// Bath table: one mode per line, "omega g_k g_kprime"; '#' lines and blank
/// lines ignored. Throws ConfigError on malformed input.
[[nodiscard]] BathSpec parse_bath_table(std::istream &in, double step_time);
[[nodiscard]] BathSpec load_bath_file(const std::string &path,
                                      double step_time);

struct ResultRow {
    Steps l;
    double closed_form;
    std::optional<double> oracle;
    std::string oracle_marker; ///< "skipped", "n/a", ... when oracle is empty
};

struct ResultTable {
    /// Ordered metadata, rendered as '# key=value' lines or the JSON "meta".
    std::vector<std::pair<std::string, nlohmann::ordered_json>> meta;
    std::vector<ResultRow> rows;
    bool oracle_feasible = true;
};

[[nodiscard]] ResultTable run_experiment(const ExperimentConfig &config);

void write_csv(std::ostream &out, const ResultTable &table);
void write_json(std::ostream &out, const ResultTable &table);
void write_table(std::ostream &out, const ResultTable &table,
                 OutputFormat format);

struct CheckItem {
    std::string name;
    double max_deviation;
    double tolerance;
    [[nodiscard]] bool passed() const { return max_deviation <= tolerance; }
};

struct CrosscheckReport {
    Model model = Model::Ideal;
    bool oracle_feasible = true;
    std::vector<CheckItem> items;
    [[nodiscard]] bool passed() const;
};

[[nodiscard]] CrosscheckReport run_crosscheck(const ExperimentConfig &config);

void write_report(std::ostream &out, const CrosscheckReport &report,
                  OutputFormat format);

/// Process exit codes of the CLI.
enum ExitCode : int {
    kExitOk = 0,
    kExitInvalidConfig = 1,
    kExitCheckFailed = 2,
    kExitOracleInfeasible = 3,
};

} // namespace su2search
