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

#include "opasim/validation.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <sstream>

#include "opasim/ensemble.h"
#include "opasim/oracle.h"
#include "opasim/rng.h"
#include "opasim/spectral.h"
#include "opasim/table.h"

namespace opasim {

namespace {

constexpr double kPi = std::numbers::pi;

/// Uniform parameter draws for the randomized checks.
class Draws {
   public:
    explicit Draws(uint64_t seed) : source_(seed ^ 0x5eed5eed5eed5eedULL) {
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * source_.uniform(counter_++, 0);
    }

   private:
    CounterNormalSource source_;
    uint64_t counter_ = 0;
};

CheckResult check(std::string name, bool passed, double measured, double bound) {
    return {std::move(name), passed, "measured " + format_number(measured) + ", bound " + format_number(bound)};
}

CheckResult orthogonality(const RunConfig &cfg) {
    TimeGrid grid = cfg.grid();
    Draws draws(cfg.seed);
    size_t k_top = grid.max_harmonic();
    double worst = 0.0;
    for (int trial = 0; trial < 50; trial++) {
        std::vector<HarmonicComponent> carriers;
        for (size_t k = 0; k <= k_top; k++) {
            carriers.push_back({k, draws.uniform(-1, 1), k == 0 ? 0.0 : draws.uniform(-1, 1)});
        }
        HarmonicSpectrum spec = full_spectrum(synthesize(carriers, grid), k_top);
        for (size_t k = 0; k <= k_top; k++) {
            worst = std::max({worst, std::abs(spec[k].c - carriers[k].c), std::abs(spec[k].s - carriers[k].s)});
        }
    }
    return check("orthogonality", worst <= 1e-12, worst, 1e-12);
}

CheckResult parseval(const RunConfig &cfg) {
    TimeGrid grid = cfg.grid();
    Draws draws(cfg.seed + 1);
    size_t k_top = grid.max_harmonic();
    double worst = 0.0;
    for (int trial = 0; trial < 50; trial++) {
        std::vector<HarmonicComponent> carriers;
        for (size_t k = 0; k <= k_top; k++) {
            carriers.push_back({k, draws.uniform(-2, 2), k == 0 ? 0.0 : draws.uniform(-2, 2)});
        }
        TimeSeries e = synthesize(carriers, grid);
        double ms = 0.0;
        for (double v : e.values()) {
            ms += v * v;
        }
        ms /= static_cast<double>(e.size());
        double predicted = full_spectrum(e, k_top).mean_square();
        worst = std::max(worst, std::abs(ms - predicted) / ms);
    }
    return check("parseval", worst <= 1e-10, worst, 1e-10);
}

CheckResult closed_form_equivalence(const RunConfig &cfg) {
    TimeGrid grid = cfg.grid();
    grid.require_resolvable(6);
    Draws draws(cfg.seed + 2);
    double worst = 0.0;
    double worst_above = 0.0;
    for (int trial = 0; trial < 1000; trial++) {
        double a = draws.uniform(0, 2);
        double b = draws.uniform(0, 2);
        double phi = draws.uniform(0, 2 * kPi);
        SusceptibilityProfile medium{draws.uniform(0.5, 2), draws.uniform(0.5, 2), draws.uniform(-1, 1), 0.0};
        const HarmonicComponent carriers[] = {
            quadratures_to_carrier(QuadraturePair::from_amplitude_phase(a, phi)), pump_carrier(b, 0.0)};
        HarmonicSpectrum numeric = full_spectrum(polarize(synthesize(carriers, grid), medium), 6).scaled(1.0 / medium.eps0);
        HarmonicSpectrum closed = predict_closed_form(a, b, phi, medium);
        for (size_t k = 0; k <= 4; k++) {
            for (auto [x, y] : {std::pair{numeric[k].c, closed[k].c}, std::pair{numeric[k].s, closed[k].s}}) {
                worst = std::max(worst, std::abs(x - y) / std::max(std::abs(y), 1e-3));
            }
        }
        for (size_t k = 5; k <= 6; k++) {
            worst_above = std::max(worst_above, numeric[k].magnitude());
        }
    }
    bool passed = worst <= 1e-9 && worst_above <= 1e-12;
    CheckResult out = check("closed_form_equivalence", passed, worst, 1e-9);
    out.detail += "; bins above k=4 " + format_number(worst_above);
    return out;
}

CheckResult band_limit_chi3(const RunConfig &cfg) {
    TimeGrid grid = cfg.grid();
    SusceptibilityProfile medium = cfg.medium;
    medium.chi3 = medium.chi3 != 0.0 ? medium.chi3 : 0.3;
    grid.require_resolvable(output_band_limit(2, medium));
    const HarmonicComponent carriers[] = {{1, 1.0, 0.2}, pump_carrier(1.0, 0.0)};
    HarmonicSpectrum spec = full_spectrum(polarize(synthesize(carriers, grid), medium), grid.max_harmonic());
    double above = 0.0;
    for (size_t k = 7; k <= spec.k_max(); k++) {
        above = std::max(above, spec[k].magnitude());
    }
    bool populated = spec[5].magnitude() > 1e-6 && spec[6].magnitude() > 1e-6;
    return check("band_limit_chi3", populated && above <= 1e-12, above, 1e-12);
}

CheckResult oracle_pipeline(const RunConfig &cfg, size_t workers) {
    PassGain gain = cfg.pass_gain();
    gain.mode = GainMode::Raw;
    try {
        gain.validate();
    } catch (const std::domain_error &ex) {
        return {"oracle_pipeline", false, ex.what()};
    }
    EnsembleConfig ens = cfg.ensemble();
    ens.n_realizations = std::min<size_t>(ens.n_realizations, 10000);
    SusceptibilityProfile medium = cfg.medium;
    medium.chi3 = 0.0;
    auto inputs = sample_state(GaussianState::vacuum(cfg.var_zp), ens, workers);
    auto outputs = propagate_ensemble(inputs, cfg.pump, cfg.pump_phase(), medium, ens.grid, workers);
    QuadratureMap map = gain.map();
    double worst = 0.0;
    for (size_t i = 0; i < inputs.size(); i++) {
        QuadraturePair expected = map(inputs[i]);
        worst = std::max({worst, std::abs(outputs[i].x1 - expected.x1), std::abs(outputs[i].x2 - expected.x2)});
    }
    return check("oracle_pipeline", worst <= 1e-10, worst, 1e-10);
}

CheckResult vacuum_flatness(const RunConfig &cfg, size_t workers) {
    EnsembleConfig ens = cfg.ensemble();
    auto inputs = sample_state(GaussianState::vacuum(cfg.var_zp), ens, workers);
    SusceptibilityProfile medium = cfg.medium;
    medium.chi3 = 0.0;
    auto outputs = propagate_ensemble(inputs, 0.0, 0.0, medium, ens.grid, workers);
    QuadratureScan scan = variance_scan(outputs, default_thetas());
    double worst = 0.0;
    for (double v : scan.variances) {
        worst = std::max(worst, std::abs(v / cfg.var_zp - 1.0));
    }
    double bound = 4.0 * std::sqrt(2.0 / static_cast<double>(ens.n_realizations - 1));
    return check("vacuum_flatness", worst <= bound, worst, bound);
}

CheckResult heisenberg_symplectic(const RunConfig &cfg, size_t workers) {
    PassGain gain = cfg.pass_gain();
    if (!(std::abs(gain.r) < 1.0)) {
        gain.r = 0.5;
    }
    gain.mode = GainMode::Symplectic;
    GaussianState out = single_pass(GaussianState::vacuum(cfg.var_zp), gain);
    double var2 = cfg.var_zp * cfg.var_zp;
    double det_error = std::abs(out.cov.det() - var2) / var2;

    EnsembleConfig ens = cfg.ensemble();
    auto inputs = sample_state(GaussianState::vacuum(cfg.var_zp), ens, workers);
    QuadratureMap map = gain.map();
    std::vector<QuadraturePair> squeezed(inputs.size());
    std::transform(inputs.begin(), inputs.end(), squeezed.begin(), map);
    SqueezingReport report = squeezing_report(variance_scan(squeezed, default_thetas()), cfg.convention());
    double mc_error = std::abs(report.uncertainty_product / var2 - 1.0);
    double mc_bound = 8.0 / std::sqrt(static_cast<double>(ens.n_realizations - 1));

    CheckResult result = check("heisenberg_symplectic", det_error <= 1e-10 && mc_error <= mc_bound, det_error, 1e-10);
    result.detail += "; monte carlo " + format_number(mc_error) + ", bound " + format_number(mc_bound);
    return result;
}

CheckResult determinism(const RunConfig &cfg, size_t workers) {
    EnsembleConfig ens = cfg.ensemble();
    ens.n_realizations = std::min<size_t>(ens.n_realizations, 2000);
    GaussianState input = GaussianState::coherent(cfg.amplitude, cfg.phi(), cfg.var_zp);
    size_t many = std::max<size_t>(workers, 4);
    auto a_in = sample_state(input, ens, 1);
    auto b_in = sample_state(input, ens, many);
    auto a = propagate_ensemble(a_in, cfg.pump, cfg.pump_phase(), cfg.medium, ens.grid, 1);
    auto b = propagate_ensemble(b_in, cfg.pump, cfg.pump_phase(), cfg.medium, ens.grid, many);
    // Reverse-order evaluation of the same realizations.
    std::vector<QuadraturePair> c(a.size());
    for (size_t i = a.size(); i-- > 0;) {
        c[i] = propagate_realization(a_in[i], cfg.pump, cfg.pump_phase(), cfg.medium, ens.grid);
    }
    auto same = [](const std::vector<QuadraturePair> &x, const std::vector<QuadraturePair> &y) {
        return x.size() == y.size() && std::memcmp(x.data(), y.data(), x.size() * sizeof(QuadraturePair)) == 0;
    };
    bool passed = same(a_in, b_in) && same(a, b) && same(a, c);
    return {"determinism", passed, passed ? "bitwise identical across 1/" + std::to_string(many) + " workers and reversed order"
                                          : "ensembles differ"};
}

}  // namespace

std::vector<CheckResult> run_validation(const RunConfig &cfg, size_t workers) {
    cfg.validate();
    std::vector<CheckResult> results;
    results.push_back(orthogonality(cfg));
    results.push_back(parseval(cfg));
    results.push_back(closed_form_equivalence(cfg));
    results.push_back(band_limit_chi3(cfg));
    results.push_back(oracle_pipeline(cfg, workers));
    results.push_back(vacuum_flatness(cfg, workers));
    results.push_back(heisenberg_symplectic(cfg, workers));
    results.push_back(determinism(cfg, workers));
    return results;
}

}  // namespace opasim
