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

// su2search_cli: step sweeps and closed-form vs. oracle cross-checks.
//
//   su2search_cli sweep --model ideal --n 1024 --marked 7 --steps-max 100
//   su2search_cli check --model decohered --n 64 --ensemble random --seed 7

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "su2search/errors.hpp"
#include "su2search/experiment.hpp"

namespace {

struct RawOptions {
    std::string model = "ideal";
    std::int64_t n = 4;
    std::string marked = "0";
    std::int64_t steps_max = 10;
    double r = 1.0;
    double delta = 0.0;
    std::string ensemble = "random";
    std::size_t env_dim = 0;
    std::string bath_file;
    double amplitude = 0.05;
    double phi = 0.0;
    double t0 = 1.0;
    double floor = su2search::kDefaultCoherenceFloor;
    int n_max = 40;
    std::uint64_t seed = 0;
    std::string format = "csv";
    std::string out = "-";
    std::size_t budget = su2search::kDefaultOracleBudget;
};

void add_options(CLI::App &cmd, RawOptions &o) {
    cmd.add_option("--model", o.model,
                   "ideal|general|multi|decohered|necoherence|"
                   "minimal-coupling|bath");
    cmd.add_option("--n", o.n, "database size N");
    cmd.add_option("--marked", o.marked, "comma-separated marked indices");
    cmd.add_option("--steps-max", o.steps_max, "last step l of the sweep");
    cmd.add_option("--r", o.r, "minimal coupling |<e+|e->|");
    cmd.add_option("--delta", o.delta, "minimal coupling phase (radians)");
    cmd.add_option("--ensemble", o.ensemble,
                   "identical|orthonormal|phase-matched|random");
    cmd.add_option("--env-dim", o.env_dim,
                   "environment dimension D (default depends on ensemble)");
    cmd.add_option("--bath-file", o.bath_file,
                   "bath table: 'omega g_k g_kprime' per line");
    cmd.add_option("--amplitude", o.amplitude,
                   "general model: |<m|gamma>|");
    cmd.add_option("--phi", o.phi, "general model: phase of <m|gamma>");
    cmd.add_option("--t0", o.t0, "duration of one search step");
    cmd.add_option("--floor", o.floor,
                   "coherence floor for the effective-step bound");
    cmd.add_option("--n-max", o.n_max, "Fock cutoff per bath mode");
    cmd.add_option("--seed", o.seed, "random seed");
    cmd.add_option("--format", o.format, "csv|json");
    cmd.add_option("--out", o.out, "output path, '-' for stdout");
    cmd.add_option("--budget", o.budget,
                   "oracle feasibility budget in amplitudes");
}

std::vector<std::size_t> parse_marked(const std::string &text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw su2search::ConfigError("--marked: empty entry");
        }
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &pos);
        } catch (const std::exception &) {
            throw su2search::ConfigError("--marked: not an index: " + item);
        }
        if (pos != item.size() || item.front() == '-') {
            throw su2search::ConfigError("--marked: not an index: " + item);
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

su2search::ExperimentConfig to_config(const RawOptions &o) {
    su2search::ExperimentConfig c;
    c.model = su2search::parse_model(o.model);
    c.n = o.n;
    c.marked = parse_marked(o.marked);
    c.steps_max = o.steps_max;
    c.r = o.r;
    c.delta = o.delta;
    c.ensemble = su2search::parse_ensemble(o.ensemble);
    if (o.env_dim != 0) {
        c.env_dim = o.env_dim;
    }
    c.amplitude = o.amplitude;
    c.phi = o.phi;
    c.t0 = o.t0;
    c.coherence_floor = o.floor;
    c.fock_cutoff = o.n_max;
    c.seed = o.seed;
    c.format = su2search::parse_format(o.format);
    c.oracle_budget = o.budget;
    if (!o.bath_file.empty()) {
        if (!(o.t0 > 0.0)) {
            throw su2search::ConfigError("--t0 must be positive");
        }
        c.bath = su2search::load_bath_file(o.bath_file, o.t0);
    }
    return c;
}

template <class Fn> int with_output(const std::string &path, Fn &&fn) {
    if (path == "-") {
        return fn(std::cout);
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open output '" << path << "'\n";
        return su2search::kExitInvalidConfig;
    }
    return fn(file);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Search dynamics, decoherence closed forms and their oracles"};
    app.require_subcommand(1);

    RawOptions sweep_opts;
    RawOptions check_opts;
    CLI::App *sweep = app.add_subcommand("sweep", "tabulate closed form and "
                                                  "oracle over l = 0..steps-max");
    CLI::App *check =
        app.add_subcommand("check", "cross-check closed forms against oracles");
    add_options(*sweep, sweep_opts);
    add_options(*check, check_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return su2search::kExitInvalidConfig;
    }

    try {
        if (sweep->parsed()) {
            const auto config = to_config(sweep_opts);
            const auto table = su2search::run_experiment(config);
            return with_output(sweep_opts.out, [&](std::ostream &os) {
                su2search::write_table(os, table, config.format);
                return su2search::kExitOk;
            });
        }
        const auto config = to_config(check_opts);
        const auto report = su2search::run_crosscheck(config);
        return with_output(check_opts.out, [&](std::ostream &os) {
            su2search::write_report(os, report, config.format);
            if (!report.oracle_feasible) {
                return su2search::kExitOracleInfeasible;
            }
            return report.passed() ? su2search::kExitOk
                                   : su2search::kExitCheckFailed;
        });
    } catch (const su2search::ConfigError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return su2search::kExitInvalidConfig;
    } catch (const su2search::DomainError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return su2search::kExitInvalidConfig;
    }
}
