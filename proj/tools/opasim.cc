// Copyright 2026 The opasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "opasim/commands.h"
#include "opasim/config.h"

using namespace opasim;

namespace {

struct Overrides {
    double eps0, chi1, chi2, chi3, amplitude, phi_deg, pump, pump_phase_deg, band_sigma, var_zp;
    size_t samples_per_period, n_periods, n_realizations, thetas;
    uint64_t seed;
    std::string mode;
};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"opasim: optical parametric generation of squeezed light, simulated."};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    size_t workers = std::max(1u, std::thread::hardware_concurrency());
    std::string out_dir = ".";
    Overrides o{};

    app.add_option("--config", config_path, "JSON config file ('-' reads stdin)");
    app.add_option("--workers", workers, "Worker threads for ensemble propagation")->check(CLI::PositiveNumber);
    std::vector<std::pair<CLI::Option *, std::function<void(RunConfig &)>>> overrides;
    auto number = [&](const char *flag, double &slot, auto setter, const char *help) {
        overrides.emplace_back(app.add_option(flag, slot, help), setter);
    };
    number("--eps0", o.eps0, [&](RunConfig &c) { c.medium.eps0 = o.eps0; }, "Vacuum permittivity");
    number("--chi1", o.chi1, [&](RunConfig &c) { c.medium.chi1 = o.chi1; }, "Linear susceptibility");
    number("--chi2", o.chi2, [&](RunConfig &c) { c.medium.chi2 = o.chi2; }, "Second-order susceptibility");
    number("--chi3", o.chi3, [&](RunConfig &c) { c.medium.chi3 = o.chi3; }, "Third-order susceptibility");
    number("--amplitude,-A", o.amplitude, [&](RunConfig &c) { c.amplitude = o.amplitude; }, "Fundamental amplitude A");
    number("--phi-deg", o.phi_deg, [&](RunConfig &c) { c.phi_deg = o.phi_deg; }, "Fundamental phase (degrees)");
    number("--pump,-B", o.pump, [&](RunConfig &c) { c.pump = o.pump; }, "Pump amplitude B");
    number("--pump-phase-deg", o.pump_phase_deg, [&](RunConfig &c) { c.pump_phase_deg = o.pump_phase_deg; },
           "Pump phase (degrees)");
    number("--band-sigma", o.band_sigma, [&](RunConfig &c) { c.band_sigma = o.band_sigma; },
           "Envelope half-width in standard deviations");
    number("--var-zp", o.var_zp, [&](RunConfig &c) { c.var_zp = o.var_zp; }, "Vacuum quadrature variance");
    overrides.emplace_back(
        app.add_option("--samples-per-period", o.samples_per_period, "Grid samples per fundamental period"),
        [&](RunConfig &c) { c.samples_per_period = o.samples_per_period; });
    overrides.emplace_back(app.add_option("--periods", o.n_periods, "Fundamental periods on the grid"),
                           [&](RunConfig &c) { c.n_periods = o.n_periods; });
    overrides.emplace_back(app.add_option("--realizations,-n", o.n_realizations, "Ensemble size"),
                           [&](RunConfig &c) { c.n_realizations = o.n_realizations; });
    overrides.emplace_back(app.add_option("--seed", o.seed, "Ensemble seed"), [&](RunConfig &c) { c.seed = o.seed; });
    overrides.emplace_back(app.add_option("--thetas", o.thetas, "Quadrature phases over [0, 180] degrees"),
                           [&](RunConfig &c) { c.thetas = o.thetas; });
    overrides.emplace_back(app.add_option("--mode", o.mode, "raw or symplectic"), [&](RunConfig &c) {
        c.mode = parse_mode(o.mode);
    });

    auto *spectrum = app.add_subcommand("spectrum", "Polarization spectrum, numeric vs closed form");
    size_t k_max = 6;
    spectrum->add_option("--k-max", k_max, "Highest harmonic to report");
    auto *scan = app.add_subcommand("scan", "Quadrature variance scan of the output ensemble");
    auto *figure = app.add_subcommand("figure", "Write plot data for one figure");
    std::string figure_name;
    figure->add_option("name", figure_name, "fig1a|fig1b|fig1c|fig1d|fig1e|fig2|fig3")->required();
    figure->add_option("--out-dir", out_dir, "Directory for the CSV files");
    auto *oracle = app.add_subcommand("oracle", "Closed-form single-pass quadrature map");
    size_t passes = 1;
    oracle->add_option("--passes", passes, "Number of passes")->check(CLI::PositiveNumber);
    auto *validate = app.add_subcommand("validate", "Run the invariant suite");
    auto *config = app.add_subcommand("config", "Configuration helpers");
    bool print_defaults_flag = false;
    config->add_flag("--print-defaults", print_defaults_flag, "Print the default config as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (config->parsed()) {
            if (!print_defaults_flag) {
                std::cerr << "config: nothing to do (try --print-defaults)\n";
                return kExitUsage;
            }
            print_defaults(std::cout);
            return kExitOk;
        }

        RunConfig cfg;
        if (!config_path.empty()) {
            if (config_path == "-") {
                cfg = parse_config(std::cin);
            } else {
                std::ifstream in(config_path);
                if (!in) {
                    throw ConfigError("Cannot open config file " + config_path + ".");
                }
                cfg = parse_config(in);
            }
        }
        for (auto &[opt, set] : overrides) {
            if (opt->count() > 0) {
                set(cfg);
            }
        }
        cfg.validate();

        CommandContext ctx{std::cout, std::cerr, workers, out_dir, k_max, passes};
        if (spectrum->parsed()) {
            return cmd_spectrum(cfg, ctx);
        }
        if (scan->parsed()) {
            return cmd_scan(cfg, ctx);
        }
        if (figure->parsed()) {
            return cmd_figure(figure_name, cfg, ctx);
        }
        if (oracle->parsed()) {
            return cmd_oracle(cfg, ctx);
        }
        if (validate->parsed()) {
            return cmd_validate(cfg, ctx);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
