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
#include "su2search/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "su2search/environment_oracle.hpp"
#include "su2search/errors.hpp"
#include "su2search/grover_fullstate.hpp"
#include "su2search/random.hpp"

namespace su2search {

namespace {

using json = nlohmann::ordered_json;

// Random ensembles have to be materialised even when the oracle is skipped
// (the closed form needs their F1, F2); this caps that allocation.
constexpr std::size_t kMaterialiseLimit = 100'000'000;

constexpr double kTolFullState = 1e-10;
constexpr double kTolPartialTrace = 1e-10;
constexpr double kTolMinimalCoupling = 1e-9;
constexpr double kTolBath = 1e-6;
constexpr double kTolIdentity = 1e-12;
constexpr double kTolOverlap = 1e-10;

std::string fmt_double(double x) { return fmt::format("{:.17g}", x); }

std::string join_indices(const std::vector<std::size_t> &v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += std::to_string(v[i]);
    }
    return out;
}

[[noreturn]] void config_error(const std::string &what) {
    throw ConfigError(what);
}

bool single_marked(Model model) {
    return model != Model::Multi && model != Model::Bath;
}

double oracle_tolerance(Model model) {
    switch (model) {
    case Model::Ideal:
    case Model::General:
    case Model::Multi:
        return kTolFullState;
    case Model::Decohered:
    case Model::Necoherence:
        return kTolPartialTrace;
    case Model::MinimalCoupling:
        return kTolMinimalCoupling;
    case Model::Bath:
        return kTolBath;
    }
    return 0.0;
}

BathSpec default_bath(double t0) {
    Eigen::VectorXd w(1);
    w << 1.0;
    Eigen::MatrixXcd g(2, 1);
    g << 0.0, 0.1;
    return {w, g, t0};
}

BathSpec bath_of(const ExperimentConfig &config) {
    if (!config.bath) {
        return default_bath(config.t0);
    }
    // Step time always follows --t0.
    return {config.bath->frequencies(), config.bath->couplings(), config.t0};
}

StateVector general_initial_state(const ExperimentConfig &config, Rng &rng) {
    using namespace std::complex_literals;
    const auto n = static_cast<Eigen::Index>(config.n);
    const auto m = static_cast<Eigen::Index>(config.marked.front());
    Eigen::VectorXcd rest(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        rest[k] = k == m ? 0.0 : rng.complex_normal();
    }
    rest *= std::sqrt(1.0 - config.amplitude * config.amplitude) / rest.norm();
    rest[m] = config.amplitude * std::exp(1i * config.phi);
    return StateVector(rest / rest.norm());
}

PointerEnsemble build_ensemble(const ExperimentConfig &config,
                               EnsembleKind kind, Rng &rng) {
    const auto n = static_cast<std::size_t>(config.n);
    const std::size_t d = effective_env_dim(config);
    const std::size_t m = config.marked.front();
    switch (kind) {
    case EnsembleKind::Identical:
        return PointerEnsemble::identical(n, d, m);
    case EnsembleKind::Orthonormal:
        return PointerEnsemble::orthonormal(n, d, m);
    case EnsembleKind::PhaseMatched:
        return PointerEnsemble::phase_matched(n, d, m);
    case EnsembleKind::Random:
        return PointerEnsemble::random(n, d, m, rng);
    }
    throw std::logic_error("unhandled ensemble kind");
}

DecoherenceFactors analytic_factors(EnsembleKind kind, std::int64_t n) {
    switch (kind) {
    case EnsembleKind::Identical:
        return DecoherenceFactors::ideal(n);
    case EnsembleKind::Orthonormal:
        return DecoherenceFactors::classical(n);
    case EnsembleKind::PhaseMatched:
        return DecoherenceFactors::necoherent(n);
    case EnsembleKind::Random:
        break;
    }
    throw std::logic_error("random ensembles have no analytic factors");
}

EnsembleKind ensemble_kind_of(const ExperimentConfig &config) {
    return config.model == Model::Necoherence ? EnsembleKind::PhaseMatched
                                              : config.ensemble;
}

void add_search_meta(ResultTable &table, const SearchAngle &angle) {
    const StepBound bound = optimal_steps(angle);
    table.meta.emplace_back("theta", angle.theta());
    table.meta.emplace_back("optimal_steps_exact", bound.exact);
    table.meta.emplace_back("optimal_steps_asymptotic", bound.asymptotic);
    table.meta.emplace_back("optimal_probability", bound.achieved_probability);
}

// Oracle trace from the full-state simulator, or empty when skipped.
void fill_rows(ResultTable &table, Steps steps_max,
               const std::function<double(Steps)> &closed_form,
               const std::vector<double> *oracle) {
    for (Steps l = 0; l <= steps_max; ++l) {
        ResultRow row{l, closed_form(l), std::nullopt, {}};
        if (oracle != nullptr) {
            row.oracle = (*oracle)[static_cast<std::size_t>(l)];
        } else {
            row.oracle_marker = "skipped";
        }
        table.rows.push_back(std::move(row));
    }
}

void run_search_model(const ExperimentConfig &config, ResultTable &table,
                      Rng &rng) {
    const auto n = static_cast<std::size_t>(config.n);
    const MarkedSet marked(config.marked);
    std::vector<double> trace;

    std::function<double(Steps)> closed;
    std::optional<StateVector> axis;
    if (config.model == Model::General) {
        const GeneralSearchAngle angle(std::asin(config.amplitude), config.phi);
        const StepBound bound = optimal_steps(angle);
        table.meta.emplace_back("amplitude", config.amplitude);
        table.meta.emplace_back("phi", angle.phi());
        table.meta.emplace_back("theta_gamma", angle.theta());
        table.meta.emplace_back("optimal_steps_exact", bound.exact);
        table.meta.emplace_back("optimal_steps_asymptotic", bound.asymptotic);
        table.meta.emplace_back("optimal_probability",
                                bound.achieved_probability);
        closed = [angle](Steps l) {
            return general_success_probability(angle, l);
        };
        if (table.oracle_feasible) {
            axis = general_initial_state(config, rng);
        }
    } else {
        const SearchAngle angle =
            config.model == Model::Multi
                ? SearchAngle::from_amplitude(
                      std::sqrt(static_cast<double>(marked.size()) /
                                static_cast<double>(n)))
                : SearchAngle::from_size(config.n);
        if (config.model == Model::Multi) {
            table.meta.emplace_back("marked_count", marked.size());
        }
        add_search_meta(table, angle);
        closed = [angle](Steps l) {
            return ideal_success_probability(angle, l);
        };
        if (table.oracle_feasible) {
            axis = uniform_state(config.n);
        }
    }

    if (axis) {
        trace = run_search(config.n, marked, *axis, config.steps_max);
        fill_rows(table, config.steps_max, closed, &trace);
    } else {
        fill_rows(table, config.steps_max, closed, nullptr);
    }
}

void run_decohered_model(const ExperimentConfig &config, ResultTable &table,
                         Rng &rng) {
    const EnsembleKind kind = ensemble_kind_of(config);
    const std::size_t d = effective_env_dim(config);
    const std::size_t m = config.marked.front();
    table.meta.emplace_back("ensemble", std::string(to_string(kind)));
    table.meta.emplace_back("env_dim", d);

    std::optional<PointerEnsemble> ensemble;
    if (table.oracle_feasible || kind == EnsembleKind::Random) {
        ensemble = build_ensemble(config, kind, rng);
    }
    const DecoherenceFactors factors =
        kind == EnsembleKind::Random ? decoherence_factors(*ensemble)
                                     : analytic_factors(kind, config.n);
    table.meta.emplace_back("F1", factors.f1());
    table.meta.emplace_back("F2", factors.f2());
    add_search_meta(table, SearchAngle::from_size(config.n));

    std::function<double(Steps)> closed;
    if (config.model == Model::Necoherence) {
        closed = [&config](Steps l) {
            return necoherence_probability(config.n, l);
        };
    } else {
        closed = [&config, factors](Steps l) {
            return decohered_probability(config.n, l, factors);
        };
    }

    if (!table.oracle_feasible) {
        fill_rows(table, config.steps_max, closed, nullptr);
        return;
    }
    // One search iterate per row on the joint state.
    const EntangledState start = entangle_then_search(config.n, m, *ensemble, 0);
    Eigen::MatrixXcd psi = start.amplitudes();
    const MarkedSet marked = MarkedSet::single(m);
    const StateVector axis = uniform_state(config.n);
    std::vector<double> trace;
    trace.reserve(static_cast<std::size_t>(config.steps_max) + 1);
    for (Steps l = 0; l <= config.steps_max; ++l) {
        if (l > 0) {
            apply_search_iterates(psi, marked, axis, 1);
        }
        trace.push_back(std::clamp(
            psi.row(static_cast<Eigen::Index>(m)).squaredNorm(), 0.0, 1.0));
    }
    fill_rows(table, config.steps_max, closed, &trace);
}

void run_minimal_coupling_model(const ExperimentConfig &config,
                                ResultTable &table) {
    const MinimalCouplingParams params(config.r, config.delta);
    const SearchAngle angle = SearchAngle::from_size(config.n);
    table.meta.emplace_back("r", params.r());
    table.meta.emplace_back("delta", params.delta());
    table.meta.emplace_back("t0", config.t0);
    table.meta.emplace_back("env_dim", 2);
    add_search_meta(table, angle);
    table.meta.emplace_back(
        "oracle_note", "generators retuned per row so <e+|e-> = r e^{2i delta} "
                       "at t = l t0; row 0 has no evolution time");

    Eigen::VectorXcd env(2);
    env << 1.0, 0.0;
    for (Steps l = 0; l <= config.steps_max; ++l) {
        ResultRow row{l, minimal_coupling_probability(config.n, l, params),
                      std::nullopt, {}};
        if (l == 0) {
            row.oracle_marker = "n/a";
        } else {
            const double t = static_cast<double>(l) * config.t0;
            const auto [h_plus, h_minus] = tuned_branch_generators(params, t);
            row.oracle = minimal_coupling_evolve(angle, h_plus, h_minus, env,
                                                 config.t0, l);
        }
        table.rows.push_back(std::move(row));
    }
}

void run_bath_model(const ExperimentConfig &config, ResultTable &table) {
    const BathSpec bath = bath_of(config);
    table.meta.emplace_back("quantity", "decoherence_factor_norm |F_01|");
    table.meta.emplace_back("modes", bath.modes());
    table.meta.emplace_back("t0", bath.step_time());
    table.meta.emplace_back("fock_cutoff", config.fock_cutoff);
    table.meta.emplace_back("coherence_floor", config.coherence_floor);

    if (config.steps_max >= 2) {
        try {
            const DecayFit fit =
                fit_decoherence_rate(bath, 0, 1, config.steps_max);
            table.meta.emplace_back("gamma", fit.gamma);
            table.meta.emplace_back("fit_residual", fit.residual);
            const auto bound = max_effective_steps(fit.gamma, bath.step_time(),
                                                   config.coherence_floor);
            if (bound) {
                table.meta.emplace_back("max_effective_steps", *bound);
            } else {
                table.meta.emplace_back("max_effective_steps", "unbounded");
            }
        } catch (const FitUnreliableError &e) {
            table.meta.emplace_back("gamma", "unreliable");
            table.meta.emplace_back("fit_residual", e.residual());
        }
    } else {
        table.meta.emplace_back("gamma", "n/a (steps_max < 2)");
    }

    std::optional<OscillatorEnvironment> env;
    if (table.oracle_feasible) {
        env.emplace(bath, config.fock_cutoff);
    }
    for (Steps l = 0; l <= config.steps_max; ++l) {
        ResultRow row{l, bath_factor_norm(bath, 0, 1, l), std::nullopt, {}};
        if (!env) {
            row.oracle_marker = "skipped";
        } else {
            try {
                row.oracle =
                    std::abs(oscillator_overlap(*env, 0, 1, l, bath.step_time()));
            } catch (const TruncationError &) {
                row.oracle_marker = "truncated";
            }
        }
        table.rows.push_back(std::move(row));
    }
}

std::string render_meta(const json &value) {
    if (value.is_string()) {
        return value.get<std::string>();
    }
    if (value.is_number_float()) {
        return fmt_double(value.get<double>());
    }
    return value.dump();
}

} // namespace

// ---------------------------------------------------------------------------
// Names

std::string_view to_string(Model model) {
    switch (model) {
    case Model::Ideal:
        return "ideal";
    case Model::General:
        return "general";
    case Model::Multi:
        return "multi";
    case Model::Decohered:
        return "decohered";
    case Model::Necoherence:
        return "necoherence";
    case Model::MinimalCoupling:
        return "minimal-coupling";
    case Model::Bath:
        return "bath";
    }
    return "?";
}

std::string_view to_string(EnsembleKind kind) {
    switch (kind) {
    case EnsembleKind::Identical:
        return "identical";
    case EnsembleKind::Orthonormal:
        return "orthonormal";
    case EnsembleKind::PhaseMatched:
        return "phase-matched";
    case EnsembleKind::Random:
        return "random";
    }
    return "?";
}

Model parse_model(std::string_view name) {
    for (const Model m :
         {Model::Ideal, Model::General, Model::Multi, Model::Decohered,
          Model::Necoherence, Model::MinimalCoupling, Model::Bath}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    config_error("unknown model '" + std::string(name) + "'");
}

EnsembleKind parse_ensemble(std::string_view name) {
    for (const EnsembleKind k :
         {EnsembleKind::Identical, EnsembleKind::Orthonormal,
          EnsembleKind::PhaseMatched, EnsembleKind::Random}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    config_error("unknown ensemble '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    config_error("unknown format '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Configuration

std::size_t effective_env_dim(const ExperimentConfig &config) {
    if (config.env_dim) {
        return *config.env_dim;
    }
    switch (ensemble_kind_of(config)) {
    case EnsembleKind::Identical:
    case EnsembleKind::PhaseMatched:
        return 1;
    case EnsembleKind::Orthonormal:
    case EnsembleKind::Random:
        return static_cast<std::size_t>(std::max<std::int64_t>(config.n, 1));
    }
    return 1;
}

std::size_t oracle_amplitudes(const ExperimentConfig &config) {
    const auto n = static_cast<std::size_t>(std::max<std::int64_t>(config.n, 0));
    switch (config.model) {
    case Model::Ideal:
    case Model::General:
    case Model::Multi:
        return n;
    case Model::Decohered:
    case Model::Necoherence:
        return n * effective_env_dim(config);
    case Model::MinimalCoupling:
        return 4;
    case Model::Bath: {
        const std::size_t modes = config.bath ? config.bath->modes() : 1;
        return modes * static_cast<std::size_t>(config.fock_cutoff + 1);
    }
    }
    return n;
}

void validate(const ExperimentConfig &c) {
    const std::int64_t min_n =
        (c.model == Model::Decohered || c.model == Model::Necoherence) ? 3 : 2;
    if (c.n < min_n) {
        config_error(fmt::format("--n must be at least {} for model {}", min_n,
                                 to_string(c.model)));
    }
    if (c.steps_max < 0) {
        config_error("--steps-max must be non-negative");
    }
    if (c.model != Model::Bath) {
        if (c.marked.empty()) {
            config_error("--marked must name at least one index");
        }
        std::vector<std::size_t> sorted = c.marked;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            config_error("--marked contains a repeated index");
        }
        if (sorted.back() >= static_cast<std::size_t>(c.n)) {
            config_error("--marked index out of range for --n");
        }
        if (single_marked(c.model) && c.marked.size() != 1) {
            config_error(fmt::format(
                "model {} takes exactly one marked index (use --model multi)",
                to_string(c.model)));
        }
        if (c.marked.size() >= static_cast<std::size_t>(c.n)) {
            config_error("at least one index must stay unmarked");
        }
    }
    if (!(c.r >= 0.0 && c.r <= 1.0)) {
        config_error("--r must lie in [0, 1]");
    }
    if (!std::isfinite(c.delta) || !std::isfinite(c.phi)) {
        config_error("--delta and --phi must be finite");
    }
    if (c.model == Model::General && !(c.amplitude > 0.0 && c.amplitude < 1.0)) {
        config_error("--amplitude must lie in (0, 1)");
    }
    if (c.env_dim && *c.env_dim < 1) {
        config_error("--env-dim must be at least 1");
    }
    if (ensemble_kind_of(c) == EnsembleKind::Orthonormal &&
        (c.model == Model::Decohered) &&
        effective_env_dim(c) < static_cast<std::size_t>(c.n)) {
        config_error("orthonormal ensemble needs --env-dim >= --n");
    }
    if (c.model == Model::Decohered && c.ensemble == EnsembleKind::Random &&
        static_cast<std::size_t>(c.n) * effective_env_dim(c) >
            kMaterialiseLimit) {
        config_error("random ensemble too large to materialise");
    }
    if (!(c.t0 > 0.0)) {
        config_error("--t0 must be positive");
    }
    if (!(c.coherence_floor > 0.0 && c.coherence_floor < 1.0)) {
        config_error("--floor must lie in (0, 1)");
    }
    if (c.fock_cutoff < 1) {
        config_error("--n-max must be at least 1");
    }
    if (c.oracle_budget < 1) {
        config_error("--budget must be positive");
    }
    if (c.bath && c.bath->levels() < 2) {
        config_error("bath needs couplings for two register levels");
    }
}

BathSpec parse_bath_table(std::istream &in, double step_time) {
    std::vector<double> w;
    std::vector<double> gk;
    std::vector<double> gkp;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        double values[3];
        const char *p = line.data() + first;
        const char *end = line.data() + line.size();
        for (int i = 0; i < 3; ++i) {
            while (p < end && (*p == ' ' || *p == '\t')) {
                ++p;
            }
            const auto [next, ec] = std::from_chars(p, end, values[i]);
            if (ec != std::errc() || next == p) {
                config_error(fmt::format("bath file line {}: expected "
                                         "'omega g_k g_kprime'",
                                         lineno));
            }
            p = next;
        }
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) {
            ++p;
        }
        if (p != end) {
            config_error(fmt::format("bath file line {}: trailing text", lineno));
        }
        if (!(values[0] > 0.0)) {
            config_error(fmt::format("bath file line {}: omega must be positive",
                                     lineno));
        }
        w.push_back(values[0]);
        gk.push_back(values[1]);
        gkp.push_back(values[2]);
    }
    if (w.empty()) {
        config_error("bath file contains no modes");
    }
    const auto m = static_cast<Eigen::Index>(w.size());
    Eigen::VectorXd freq(m);
    Eigen::MatrixXcd g(2, m);
    for (Eigen::Index j = 0; j < m; ++j) {
        freq[j] = w[static_cast<std::size_t>(j)];
        g(0, j) = gk[static_cast<std::size_t>(j)];
        g(1, j) = gkp[static_cast<std::size_t>(j)];
    }
    try {
        return {freq, g, step_time};
    } catch (const DomainError &e) {
        config_error(e.what());
    }
}

BathSpec load_bath_file(const std::string &path, double step_time) {
    std::ifstream in(path);
    if (!in) {
        config_error("cannot open bath file '" + path + "'");
    }
    return parse_bath_table(in, step_time);
}

// ---------------------------------------------------------------------------
// Sweeps

ResultTable run_experiment(const ExperimentConfig &config) {
    validate(config);
    ResultTable table;
    const std::size_t amplitudes = oracle_amplitudes(config);
    table.oracle_feasible = amplitudes <= config.oracle_budget;

    table.meta.emplace_back("model", std::string(to_string(config.model)));
    table.meta.emplace_back("n", config.n);
    if (config.model != Model::Bath) {
        table.meta.emplace_back("marked", join_indices(config.marked));
    }
    table.meta.emplace_back("steps_max", config.steps_max);
    table.meta.emplace_back("seed", config.seed);
    table.meta.emplace_back("rng", std::string(Rng::kAlgorithm));
    table.meta.emplace_back("oracle_budget", config.oracle_budget);
    table.meta.emplace_back(
        "oracle",
        table.oracle_feasible
            ? std::string("computed")
            : fmt::format("skipped (amplitudes={} exceeds budget={})",
                          amplitudes, config.oracle_budget));

    Rng rng(config.seed);
    switch (config.model) {
    case Model::Ideal:
    case Model::General:
    case Model::Multi:
        run_search_model(config, table, rng);
        break;
    case Model::Decohered:
    case Model::Necoherence:
        run_decohered_model(config, table, rng);
        break;
    case Model::MinimalCoupling:
        run_minimal_coupling_model(config, table);
        break;
    case Model::Bath:
        run_bath_model(config, table);
        break;
    }
    return table;
}

void write_csv(std::ostream &out, const ResultTable &table) {
    out << "# su2search sweep\n";
    for (const auto &[key, value] : table.meta) {
        out << "# " << key << '=' << render_meta(value) << '\n';
    }
    out << "l,closed_form_probability,oracle_probability,abs_difference\n";
    for (const ResultRow &row : table.rows) {
        out << row.l << ',' << fmt_double(row.closed_form) << ',';
        if (row.oracle) {
            out << fmt_double(*row.oracle) << ','
                << fmt_double(std::abs(row.closed_form - *row.oracle));
        } else {
            out << row.oracle_marker << ',';
        }
        out << '\n';
    }
}

void write_json(std::ostream &out, const ResultTable &table) {
    json doc;
    json meta = json::object();
    for (const auto &[key, value] : table.meta) {
        meta[key] = value;
    }
    doc["meta"] = std::move(meta);
    json rows = json::array();
    for (const ResultRow &row : table.rows) {
        json r;
        r["l"] = row.l;
        r["closed_form_probability"] = row.closed_form;
        if (row.oracle) {
            r["oracle_probability"] = *row.oracle;
            r["abs_difference"] = std::abs(row.closed_form - *row.oracle);
        } else {
            r["oracle_probability"] = row.oracle_marker;
            r["abs_difference"] = nullptr;
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

void write_table(std::ostream &out, const ResultTable &table,
                 OutputFormat format) {
    if (format == OutputFormat::Json) {
        write_json(out, table);
    } else {
        write_csv(out, table);
    }
}

// ---------------------------------------------------------------------------
// Cross-checks

bool CrosscheckReport::passed() const {
    return oracle_feasible &&
           std::all_of(items.begin(), items.end(),
                       [](const CheckItem &c) { return c.passed(); });
}

CrosscheckReport run_crosscheck(const ExperimentConfig &config) {
    validate(config);
    CrosscheckReport report;
    report.model = config.model;
    if (oracle_amplitudes(config) > config.oracle_budget) {
        report.oracle_feasible = false;
        return report;
    }

    const ResultTable table = run_experiment(config);

    double worst = 0.0;
    double range = 0.0;
    std::size_t compared = 0;
    for (const ResultRow &row : table.rows) {
        for (const std::optional<double> v :
             {std::optional<double>(row.closed_form), row.oracle}) {
            if (v) {
                range = std::max({range, -*v, *v - 1.0});
            }
        }
        if (row.oracle) {
            worst = std::max(worst, std::abs(row.closed_form - *row.oracle));
            ++compared;
        } else if (row.oracle_marker == "truncated") {
            worst = std::max(worst, 1.0);
        }
    }
    report.items.push_back(
        {"closed_form_vs_oracle", compared > 0 ? worst : 1.0,
         oracle_tolerance(config.model)});
    report.items.push_back({config.model == Model::Bath ? "factor_in_unit_interval"
                                                        : "probability_in_unit_interval",
                            range, 0.0});

    const auto n = config.n;
    switch (config.model) {
    case Model::Ideal:
    case Model::Multi: {
        // Full state after steps_max iterates: unit norm, and every
        // unmarked amplitude equal (confinement to the search plane).
        const MarkedSet marked(config.marked);
        const StateVector axis = uniform_state(n);
        Eigen::MatrixXcd v = axis.amplitudes();
        apply_search_iterates(v, marked, axis, config.steps_max);
        report.items.push_back(
            {"norm_preservation", std::abs(v.norm() - 1.0), kTolFullState});
        std::optional<std::complex<double>> first;
        double spread = 0.0;
        for (Eigen::Index k = 0; k < v.rows(); ++k) {
            if (marked.contains(static_cast<std::size_t>(k))) {
                continue;
            }
            if (!first) {
                first = v(k, 0);
            }
            spread = std::max(spread, std::abs(v(k, 0) - *first));
        }
        report.items.push_back({"plane_confinement", spread, kTolFullState});
        break;
    }
    case Model::General: {
        const GeneralSearchAngle a(std::asin(config.amplitude), config.phi);
        const GeneralSearchAngle b(std::asin(config.amplitude), 0.0);
        double dev = 0.0;
        for (Steps l = 0; l <= config.steps_max; ++l) {
            dev = std::max(dev, std::abs(general_success_probability(a, l) -
                                         general_success_probability(b, l)));
        }
        report.items.push_back({"phase_invariance", dev, 1e-14});
        break;
    }
    case Model::Decohered:
    case Model::Necoherence: {
        Rng rng(config.seed);
        const EnsembleKind kind = ensemble_kind_of(config);
        const PointerEnsemble ensemble = build_ensemble(config, kind, rng);
        const DecoherenceFactors measured = decoherence_factors(ensemble);
        report.items.push_back(
            {"factor_bounds",
             DecoherenceFactors::bound_violation(n, measured.f1(), measured.f2()),
             0.0});
        if (kind != EnsembleKind::Random) {
            const DecoherenceFactors expected = analytic_factors(kind, n);
            report.items.push_back(
                {"factors_match_ensemble",
                 std::max(std::abs(expected.f1() - measured.f1()),
                          std::abs(expected.f2() - measured.f2())),
                 kTolIdentity});
        }
        double identity = 0.0;
        for (Steps l = 0; l <= config.steps_max; ++l) {
            identity = std::max(
                identity, std::abs(decohered_probability(n, l, measured) -
                                   partial_trace_expansion(n, l, measured)));
        }
        report.items.push_back(
            {"closed_form_vs_partial_trace_expansion", identity, kTolIdentity});
        break;
    }
    case Model::MinimalCoupling: {
        const MinimalCouplingParams params(config.r, config.delta);
        Eigen::VectorXcd env(2);
        env << 1.0, 0.0;
        const std::complex<double> target =
            params.r() * std::exp(std::complex<double>(0.0, 2.0 * params.delta()));
        double dev = 0.0;
        for (Steps l = 1; l <= config.steps_max; ++l) {
            const double t = static_cast<double>(l) * config.t0;
            const auto [hp, hm] = tuned_branch_generators(params, t);
            dev = std::max(dev,
                           std::abs(branch_pointer_overlap(hp, hm, env, t) - target));
        }
        report.items.push_back({"tuned_pointer_overlap", dev, kTolOverlap});
        break;
    }
    case Model::Bath:
        break;
    }
    return report;
}

void write_report(std::ostream &out, const CrosscheckReport &report,
                  OutputFormat format) {
    if (format == OutputFormat::Json) {
        json doc;
        doc["model"] = std::string(to_string(report.model));
        doc["oracle_feasible"] = report.oracle_feasible;
        json items = json::array();
        for (const CheckItem &c : report.items) {
            items.push_back({{"name", c.name},
                             {"max_deviation", c.max_deviation},
                             {"tolerance", c.tolerance},
                             {"passed", c.passed()}});
        }
        doc["checks"] = std::move(items);
        doc["passed"] = report.passed();
        out << doc.dump(2) << '\n';
        return;
    }
    out << "# su2search check model=" << to_string(report.model) << '\n';
    if (!report.oracle_feasible) {
        out << "oracle infeasible: raise --budget or shrink the model\n";
        return;
    }
    for (const CheckItem &c : report.items) {
        out << (c.passed() ? "PASS " : "FAIL ") << c.name
            << " max_deviation=" << fmt_double(c.max_deviation)
            << " tolerance=" << fmt_double(c.tolerance) << '\n';
    }
    out << (report.passed() ? "PASS" : "FAIL") << '\n';
}

} // namespace su2search
