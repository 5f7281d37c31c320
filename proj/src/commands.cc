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

#include "opasim/commands.h"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

#include "opasim/figures.h"
#include "opasim/oracle.h"
#include "opasim/spectral.h"
#include "opasim/table.h"
#include "opasim/validation.h"

namespace opasim {

namespace {

constexpr double kSpectrumTolerance = 1e-9;

double rad_to_deg(double rad) {
    return rad * 180.0 / std::numbers::pi;
}

/// Signed pump amplitude equivalent to the configured pump phase, when the closed form
/// covers it (pump phase 0 or 180 degrees).
std::optional<double> closed_form_pump(const RunConfig &cfg) {
    double wrapped = std::fmod(std::fmod(cfg.pump_phase_deg, 360.0) + 360.0, 360.0);
    if (wrapped == 0.0) {
        return cfg.pump;
    }
    if (wrapped == 180.0) {
        return -cfg.pump;
    }
    return std::nullopt;
}

/// Eigenvalues (min, max) of a covariance.
std::pair<double, double> principal_variances(const Covariance2 &cov) {
    double mid = 0.5 * (cov.xx + cov.yy);
    double radius = std::hypot(0.5 * (cov.xx - cov.yy), cov.xy);
    return {mid - radius, mid + radius};
}

}  // namespace

int cmd_spectrum(const RunConfig &cfg, const CommandContext &ctx) {
    cfg.validate();
    TimeGrid grid = cfg.grid();
    grid.require_resolvable(ctx.k_max);
    const HarmonicComponent carriers[] = {
        quadratures_to_carrier(QuadraturePair::from_amplitude_phase(cfg.amplitude, cfg.phi())),
        pump_carrier(cfg.pump, cfg.pump_phase()),
    };
    HarmonicSpectrum numeric =
        full_spectrum(polarize(synthesize(carriers, grid), cfg.medium), ctx.k_max).scaled(1.0 / cfg.medium.eps0);

    std::optional<HarmonicSpectrum> closed;
    auto signed_pump = closed_form_pump(cfg);
    if (cfg.medium.chi3 == 0.0 && signed_pump.has_value()) {
        closed = predict_closed_form(cfg.amplitude, *signed_pump, cfg.phi(), cfg.medium);
    } else {
        ctx.log << "note: no closed form for chi3 != 0 or pump phase other than 0/180 deg; numeric columns only\n";
    }

    Table table{
        {"k", "c", "s", "magnitude", "phase", "c_closed", "s_closed", "magnitude_closed", "phase_closed", "deviation"}, {}};
    double max_deviation = 0.0;
    for (size_t k = 0; k <= ctx.k_max; k++) {
        const HarmonicComponent &h = numeric[k];
        std::vector<std::optional<double>> row{
            static_cast<double>(k), h.c, h.s, h.magnitude(), h.phase(), {}, {}, {}, {}, {}};
        if (closed.has_value()) {
            HarmonicComponent p = k <= closed->k_max() ? (*closed)[k] : HarmonicComponent{k, 0.0, 0.0};
            double deviation = std::max(std::abs(h.c - p.c), std::abs(h.s - p.s)) / std::max(1.0, p.magnitude());
            max_deviation = std::max(max_deviation, deviation);
            row[5] = p.c;
            row[6] = p.s;
            row[7] = p.magnitude();
            row[8] = p.phase();
            row[9] = deviation;
        }
        table.add_row(std::move(row));
    }
    table.write_csv(ctx.out);
    if (!closed.has_value()) {
        return kExitOk;
    }
    ctx.log << "max_deviation=" << format_number(max_deviation) << '\n';
    if (max_deviation > kSpectrumTolerance) {
        ctx.log << "FAIL: numeric spectrum deviates from the closed form by more than "
                << format_number(kSpectrumTolerance) << '\n';
        return kExitValidationFailure;
    }
    return kExitOk;
}

int cmd_scan(const RunConfig &cfg, const CommandContext &ctx) {
    cfg.validate();
    EnsembleConfig ens = cfg.ensemble();
    auto inputs = sample_state(GaussianState::coherent(cfg.amplitude, cfg.phi(), cfg.var_zp), ens, ctx.workers);
    std::vector<QuadraturePair> outputs;
    if (cfg.mode == GainMode::Raw) {
        outputs = propagate_ensemble(inputs, cfg.pump, cfg.pump_phase(), cfg.medium, ens.grid, ctx.workers);
    } else {
        QuadratureMap map = cfg.pass_gain().map();
        outputs.resize(inputs.size());
        parallel_for(inputs.size(), ctx.workers, [&](size_t i) { outputs[i] = map(inputs[i]); });
    }
    QuadratureScan scan = variance_scan(outputs, theta_grid(cfg.thetas, std::numbers::pi));
    scan_table(scan, cfg.convention()).write_csv(ctx.out);

    SqueezingReport report = squeezing_report(scan, cfg.convention());
    ctx.log << "squeeze_db=" << format_number(report.squeeze_db)
            << " antisqueeze_db=" << format_number(report.antisqueeze_db)
            << " theta_min_deg=" << format_number(std::round(rad_to_deg(report.theta_min) * 1e9) / 1e9)
            << " theta_max_deg=" << format_number(std::round(rad_to_deg(report.theta_max) * 1e9) / 1e9)
            << " v_min=" << format_number(report.v_min) << " v_max=" << format_number(report.v_max)
            << " uncertainty_product=" << format_number(report.uncertainty_product) << '\n';
    return kExitOk;
}

int cmd_figure(std::string_view name, const RunConfig &cfg, const CommandContext &ctx) {
    auto files = figure_bundle(name, cfg, ctx.workers);
    std::error_code ec;
    std::filesystem::create_directories(ctx.out_dir, ec);
    for (const auto &file : files) {
        std::filesystem::path path = ctx.out_dir / file.file_name;
        std::ofstream stream(path, std::ios::binary);
        if (!stream) {
            throw ConfigError("Cannot write " + path.string() + ".");
        }
        file.table.write_csv(stream);
        ctx.out << path.string() << '\n';
    }
    return kExitOk;
}

int cmd_oracle(const RunConfig &cfg, const CommandContext &ctx) {
    cfg.validate();
    if (ctx.passes == 0) {
        throw ConfigError("--passes must be at least 1.");
    }
    PassGain gain = cfg.pass_gain();
    GaussianState input = GaussianState::coherent(cfg.amplitude, cfg.phi(), cfg.var_zp);
    GaussianState out = iterate_passes(input, gain, ctx.passes);
    auto [g_sqz, g_amp] = gain.gains();
    auto [v_min, v_max] = principal_variances(out.cov);

    std::vector<std::pair<std::string, double>> rows{
        {"r", gain.r},
        {"squeeze_axis_deg", rad_to_deg(gain.axis)},
        {"gain_squeezed", g_sqz},
        {"gain_amplified", g_amp},
        {"passes", static_cast<double>(ctx.passes)},
        {"mean_x1", out.mean.x1},
        {"mean_x2", out.mean.x2},
        {"cov_xx", out.cov.xx},
        {"cov_xy", out.cov.xy},
        {"cov_yy", out.cov.yy},
        {"det", out.cov.det()},
        {"v_min", v_min},
        {"v_max", v_max},
        {"squeeze_db", 10.0 * std::log10(v_min / cfg.var_zp)},
        {"antisqueeze_db", 10.0 * std::log10(v_max / cfg.var_zp)},
        {"uncertainty_product", v_min * v_max},
    };
    if (cfg.amplitude > 0.0) {
        rows.emplace_back("gain_of_phase", gain_of_phase(cfg.amplitude, cfg.phi(), gain));
    }
    ctx.out << "quantity,value\n";
    for (const auto &[name, value] : rows) {
        ctx.out << name << ',' << format_number(value) << '\n';
    }
    ctx.log << "mode=" << mode_name(gain.mode) << '\n';
    return kExitOk;
}

int cmd_validate(const RunConfig &cfg, const CommandContext &ctx) {
    auto results = run_validation(cfg, ctx.workers);
    bool all = true;
    for (const auto &r : results) {
        ctx.out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        all = all && r.passed;
    }
    ctx.out << (all ? "all checks passed" : "validation FAILED") << '\n';
    return all ? kExitOk : kExitValidationFailure;
}

void print_defaults(std::ostream &out) {
    out << to_json(RunConfig{}).dump(2) << '\n';
}

}  // namespace opasim
