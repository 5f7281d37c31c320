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

#include "opasim/figures.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "opasim/ensemble.h"
#include "opasim/oracle.h"
#include "opasim/spectral.h"

namespace opasim {

namespace {

constexpr size_t kBlockSize = 1024;
constexpr size_t kCharacteristicPoints = 201;

struct RunningMoments {
    double count = 0.0;
    std::vector<double> mean;
    std::vector<double> m2;
};

void merge_into(RunningMoments &acc, const RunningMoments &block) {
    if (block.count == 0.0) {
        return;
    }
    if (acc.count == 0.0) {
        acc = block;
        return;
    }
    double total = acc.count + block.count;
    for (size_t j = 0; j < acc.mean.size(); j++) {
        double delta = block.mean[j] - acc.mean[j];
        acc.mean[j] += delta * block.count / total;
        acc.m2[j] += block.m2[j] + delta * delta * acc.count * block.count / total;
    }
    acc.count = total;
}

Table envelope_table(const TimeGrid &grid, const Envelope &env, double band_sigma) {
    Table table{{"t", "mean", "std", "lower", "upper"}, {}};
    for (size_t n = 0; n < grid.size(); n++) {
        double half = band_sigma * env.stddev[n];
        table.add_row({grid.time(n), env.mean[n], env.stddev[n], env.mean[n] - half, env.mean[n] + half});
    }
    return table;
}

void fill_fundamental(const QuadraturePair &q, const TimeGrid &grid, std::span<double> out) {
    for (size_t n = 0; n < grid.size(); n++) {
        out[n] = q.x1 * grid.cos_at(1, n) + q.x2 * grid.sin_at(1, n);
    }
}

std::vector<FigureFile> fig1(std::string_view name, const RunConfig &cfg, size_t workers) {
    const double var_zp = cfg.var_zp;
    const double r = std::abs(cfg.pass_gain().r);
    const double phi = cfg.phi();
    const double bright = coherent_amplitude(cfg);
    // The amplitude quadrature of A cos(w t + phi) lies at theta = -phi.
    const double amplitude_axis = -phi;

    GaussianState state = GaussianState::vacuum(var_zp);
    if (name == "fig1b") {
        state = single_pass(state, PassGain{r, GainMode::Symplectic, 0.0});
    } else if (name == "fig1c") {
        state = GaussianState::coherent(bright, phi, var_zp);
    } else if (name == "fig1d") {
        state = single_pass(
            GaussianState::coherent(bright, phi, var_zp),
            PassGain{r, GainMode::Symplectic, amplitude_axis + std::numbers::pi / 2});
    } else if (name == "fig1e") {
        state = single_pass(GaussianState::coherent(bright, phi, var_zp), PassGain{r, GainMode::Symplectic, amplitude_axis});
    }

    TimeGrid grid = cfg.grid();
    auto pairs = sample_state(state, cfg.ensemble(), workers);
    auto envs = trace_envelopes(
        pairs.size(), grid.size(), 1, [&](size_t i, std::span<double> out) { fill_fundamental(pairs[i], grid, out); },
        workers);
    return {{std::string(name) + ".csv", envelope_table(grid, envs[0], cfg.band_sigma)}};
}

std::vector<FigureFile> fig_pipeline(std::string_view name, const RunConfig &cfg, size_t workers) {
    const bool coherent = name == "fig3";
    const double var_zp = cfg.var_zp;
    const double phi = coherent ? cfg.phi() : 0.0;
    const double pump_phase = coherent ? 2.0 * phi + cfg.pump_phase() : cfg.pump_phase();
    const GaussianState input =
        coherent ? GaussianState::coherent(coherent_amplitude(cfg), phi, var_zp) : GaussianState::vacuum(var_zp);
    const SusceptibilityProfile &medium = cfg.medium;
    const TimeGrid grid = cfg.grid();
    const size_t n_samples = grid.size();
    grid.require_resolvable(output_band_limit(2, medium));

    auto inputs = sample_state(input, cfg.ensemble(), workers);
    const HarmonicComponent pump = pump_carrier(cfg.pump, pump_phase);

    auto input_env = trace_envelopes(
        inputs.size(), n_samples, 1,
        [&](size_t i, std::span<double> out) {
            const HarmonicComponent carriers[] = {quadratures_to_carrier(inputs[i]), pump};
            TimeSeries e = synthesize(carriers, grid);
            std::copy(e.values().begin(), e.values().end(), out.begin());
        },
        workers);

    auto output_env = trace_envelopes(
        inputs.size(), n_samples, 2,
        [&](size_t i, std::span<double> out) {
            TimeSeries e = output_field(inputs[i], cfg.pump, pump_phase, medium, grid);
            std::copy(e.values().begin(), e.values().end(), out.begin());
            QuadraturePair fundamental = carrier_to_quadratures(lockin_extract(e, 1));
            fill_fundamental(fundamental, grid, out.subspan(n_samples));
        },
        workers);

    auto outputs = propagate_ensemble(inputs, cfg.pump, pump_phase, medium, grid, workers);

    std::string prefix(name);
    std::vector<FigureFile> files;
    files.push_back({prefix + "_input.csv", envelope_table(grid, input_env[0], cfg.band_sigma)});

    double field_max = 0.0;
    for (size_t n = 0; n < n_samples; n++) {
        double half = cfg.band_sigma * input_env[0].stddev[n];
        field_max = std::max(field_max, std::abs(input_env[0].mean[n]) + half);
    }
    field_max = field_max > 0.0 ? 1.1 * field_max : 1.0;
    Table characteristic{{"field", "polarization", "output"}, {}};
    for (size_t j = 0; j < kCharacteristicPoints; j++) {
        double e = -field_max + 2.0 * field_max * static_cast<double>(j) / (kCharacteristicPoints - 1);
        double p = polarization_of(e, medium);
        characteristic.add_row({e, p, p / (medium.eps0 * medium.chi1)});
    }
    files.push_back({prefix + "_characteristic.csv", std::move(characteristic)});

    Table output{{"t", "mean", "std", "lower", "upper", "fund_mean", "fund_std", "fund_lower", "fund_upper"}, {}};
    for (size_t n = 0; n < n_samples; n++) {
        const Envelope &full = output_env[0];
        const Envelope &fund = output_env[1];
        double half = cfg.band_sigma * full.stddev[n];
        double fund_half = cfg.band_sigma * fund.stddev[n];
        output.add_row({
            grid.time(n),
            full.mean[n],
            full.stddev[n],
            full.mean[n] - half,
            full.mean[n] + half,
            fund.mean[n],
            fund.stddev[n],
            fund.mean[n] - fund_half,
            fund.mean[n] + fund_half,
        });
    }
    files.push_back({prefix + "_output.csv", std::move(output)});

    auto thetas = theta_grid(2 * (cfg.thetas - 1) + 1, 2.0 * std::numbers::pi);
    files.push_back({prefix + "_scan.csv", scan_table(variance_scan(outputs, thetas), cfg.convention())});
    return files;
}

}  // namespace

std::vector<Envelope> trace_envelopes(
    size_t n_realizations, size_t n_samples, size_t n_channels,
    const std::function<void(size_t, std::span<double>)> &trace, size_t workers) {
    const size_t width = n_samples * n_channels;
    const size_t n_blocks = (n_realizations + kBlockSize - 1) / kBlockSize;
    std::vector<RunningMoments> blocks(n_blocks);
    parallel_for(n_blocks, workers, [&](size_t b) {
        RunningMoments &m = blocks[b];
        m.mean.assign(width, 0.0);
        m.m2.assign(width, 0.0);
        std::vector<double> buf(width);
        size_t end = std::min(n_realizations, (b + 1) * kBlockSize);
        for (size_t i = b * kBlockSize; i < end; i++) {
            trace(i, buf);
            m.count += 1.0;
            for (size_t j = 0; j < width; j++) {
                double delta = buf[j] - m.mean[j];
                m.mean[j] += delta / m.count;
                m.m2[j] += delta * (buf[j] - m.mean[j]);
            }
        }
    });
    RunningMoments total;
    for (const auto &block : blocks) {
        merge_into(total, block);
    }

    std::vector<Envelope> out(n_channels);
    for (size_t ch = 0; ch < n_channels; ch++) {
        out[ch].mean.resize(n_samples);
        out[ch].stddev.resize(n_samples);
        for (size_t n = 0; n < n_samples; n++) {
            size_t j = ch * n_samples + n;
            out[ch].mean[n] = total.count > 0 ? total.mean[j] : 0.0;
            out[ch].stddev[n] = total.count > 1 ? std::sqrt(total.m2[j] / (total.count - 1.0)) : 0.0;
        }
    }
    return out;
}

Table scan_table(const QuadratureScan &scan, const VacuumConvention &convention) {
    Table table{{"theta_deg", "variance", "mean", "squeeze_db"}, {}};
    for (size_t j = 0; j < scan.thetas.size(); j++) {
        table.add_row({
            // Snap to 1e-9 degree so grid phases print as the round numbers they are.
            std::round(scan.thetas[j] * 180.0 / std::numbers::pi * 1e9) / 1e9,
            scan.variances[j],
            scan.means[j],
            10.0 * std::log10(scan.variances[j] / convention.var_zp),
        });
    }
    return table;
}

double coherent_amplitude(const RunConfig &cfg) {
    return cfg.amplitude != 0.0 ? cfg.amplitude : 3.0;
}

std::vector<FigureFile> figure_bundle(std::string_view name, const RunConfig &cfg, size_t workers) {
    cfg.validate();
    if (name.starts_with("fig1") && std::find(std::begin(kFigureNames), std::end(kFigureNames), name) != std::end(kFigureNames)) {
        return fig1(name, cfg, workers);
    }
    if (name == "fig2" || name == "fig3") {
        return fig_pipeline(name, cfg, workers);
    }
    throw ConfigError(
        "Unknown figure '" + std::string(name) + "' (expected fig1a, fig1b, fig1c, fig1d, fig1e, fig2 or fig3).");
}

}  // namespace opasim
