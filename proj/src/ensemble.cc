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

#include "opasim/ensemble.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "opasim/rng.h"
#include "opasim/spectral.h"

namespace opasim {

void VacuumConvention::validate() const {
    if (!(var_zp > 0.0)) {
        throw std::invalid_argument("var_zp must be positive.");
    }
}

void EnsembleConfig::validate() const {
    if (n_realizations == 0) {
        throw std::invalid_argument("n_realizations must be positive.");
    }
    convention.validate();
}

void parallel_for(size_t count, size_t workers, const std::function<void(size_t)> &body) {
    workers = std::max<size_t>(1, std::min(workers, count));
    if (workers == 1) {
        for (size_t i = 0; i < count; i++) {
            body(i);
        }
        return;
    }
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (size_t w = 0; w < workers; w++) {
        size_t begin = count * w / workers;
        size_t end = count * (w + 1) / workers;
        threads.emplace_back([&body, begin, end] {
            for (size_t i = begin; i < end; i++) {
                body(i);
            }
        });
    }
}

std::vector<QuadraturePair> sample_state(const GaussianState &state, const EnsembleConfig &cfg, size_t workers) {
    cfg.validate();
    const Covariance2 &cov = state.cov;
    if (!cov.is_psd()) {
        throw std::invalid_argument("Covariance is not positive semi-definite.");
    }
    // Lower Cholesky factor, tolerating singular covariances.
    double l11 = std::sqrt(cov.xx);
    double l21 = l11 > 0.0 ? cov.xy / l11 : 0.0;
    double l22 = std::sqrt(std::max(0.0, cov.yy - l21 * l21));

    CounterNormalSource source(cfg.seed);
    std::vector<QuadraturePair> out(cfg.n_realizations);
    parallel_for(out.size(), workers, [&](size_t i) {
        auto [z1, z2] = source.normal_pair(i);
        out[i] = {state.mean.x1 + l11 * z1, state.mean.x2 + l21 * z1 + l22 * z2};
    });
    return out;
}

TimeSeries output_field(
    const QuadraturePair &q, double pump_amplitude, double pump_phase, const SusceptibilityProfile &medium,
    const TimeGrid &grid) {
    grid.require_resolvable(output_band_limit(2, medium));
    const HarmonicComponent carriers[] = {quadratures_to_carrier(q), pump_carrier(pump_amplitude, pump_phase)};
    return normalize_output(polarize(synthesize(carriers, grid), medium), medium);
}

QuadraturePair propagate_realization(
    const QuadraturePair &q, double pump_amplitude, double pump_phase, const SusceptibilityProfile &medium,
    const TimeGrid &grid) {
    return carrier_to_quadratures(lockin_extract(output_field(q, pump_amplitude, pump_phase, medium, grid), 1));
}

std::vector<QuadraturePair> propagate_ensemble(
    std::span<const QuadraturePair> inputs, double pump_amplitude, double pump_phase,
    const SusceptibilityProfile &medium, const TimeGrid &grid, size_t workers) {
    medium.require_radiating();
    grid.require_resolvable(output_band_limit(2, medium));
    std::vector<QuadraturePair> out(inputs.size());
    parallel_for(out.size(), workers, [&](size_t i) {
        out[i] = propagate_realization(inputs[i], pump_amplitude, pump_phase, medium, grid);
    });
    return out;
}

std::vector<double> theta_grid(size_t count, double span) {
    if (count == 0) {
        throw std::invalid_argument("theta grid needs at least one point.");
    }
    std::vector<double> thetas(count, 0.0);
    if (count == 1) {
        return thetas;
    }
    for (size_t i = 0; i < count; i++) {
        thetas[i] = span * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return thetas;
}

std::vector<double> default_thetas() {
    return theta_grid(181, std::numbers::pi);
}

QuadratureScan variance_scan(std::span<const QuadraturePair> pairs, std::span<const double> thetas) {
    if (pairs.size() < 2) {
        throw std::invalid_argument("variance_scan needs at least two realizations.");
    }
    QuadratureScan scan;
    scan.thetas.assign(thetas.begin(), thetas.end());
    scan.variances.resize(thetas.size());
    scan.means.resize(thetas.size());
    double n = static_cast<double>(pairs.size());
    for (size_t j = 0; j < thetas.size(); j++) {
        double c = std::cos(thetas[j]);
        double s = std::sin(thetas[j]);
        // Shifted by the first sample so identical samples give exactly zero spread.
        double origin = pairs[0].x1 * c + pairs[0].x2 * s;
        double sum = 0.0;
        for (const auto &p : pairs) {
            sum += (p.x1 * c + p.x2 * s) - origin;
        }
        double mean_shift = sum / n;
        double sum_sq = 0.0;
        for (const auto &p : pairs) {
            double d = (p.x1 * c + p.x2 * s) - origin - mean_shift;
            sum_sq += d * d;
        }
        scan.means[j] = origin + mean_shift;
        scan.variances[j] = sum_sq / (n - 1.0);
    }
    return scan;
}

SqueezingReport squeezing_report(const QuadratureScan &scan, const VacuumConvention &convention) {
    convention.validate();
    if (scan.variances.empty() || scan.variances.size() != scan.thetas.size()) {
        throw std::invalid_argument("squeezing_report needs a non-empty scan.");
    }
    auto [min_it, max_it] = std::minmax_element(scan.variances.begin(), scan.variances.end());
    size_t i_min = static_cast<size_t>(min_it - scan.variances.begin());
    size_t i_max = static_cast<size_t>(max_it - scan.variances.begin());

    SqueezingReport report;
    report.v_min = *min_it;
    report.theta_min = scan.thetas[i_min];
    report.v_max = *max_it;
    report.theta_max = scan.thetas[i_max];
    report.squeeze_db = 10.0 * std::log10(report.v_min / convention.var_zp);
    report.antisqueeze_db = 10.0 * std::log10(report.v_max / convention.var_zp);

    const double pi = std::numbers::pi;
    double target = report.theta_min + pi / 2;
    size_t i_orth = i_min;
    double best = INFINITY;
    for (size_t j = 0; j < scan.thetas.size(); j++) {
        double d = std::remainder(scan.thetas[j] - target, pi);
        if (std::abs(d) < best) {
            best = std::abs(d);
            i_orth = j;
        }
    }
    report.uncertainty_product = report.v_min * scan.variances[i_orth];
    return report;
}

}  // namespace opasim
