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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "opasim/commands.h"
#include "opasim/ensemble.h"
#include "opasim/figures.h"
#include "opasim/oracle.h"
#include "opasim/spectral.h"

using namespace opasim;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed;
    std::string detail;
};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

TimeSeries signal_and_pump(double a, double b, double phi, const TimeGrid &grid) {
    const HarmonicComponent carriers[] = {
        quadratures_to_carrier(QuadraturePair::from_amplitude_phase(a, phi)), pump_carrier(b, 0.0)};
    return synthesize(carriers, grid);
}

EnsembleConfig ensemble(size_t n, uint64_t seed) {
    EnsembleConfig cfg;
    cfg.n_realizations = n;
    cfg.seed = seed;
    return cfg;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. Numeric pipeline spectrum equals the closed form in bins 0..4.
Outcome closed_form_equivalence() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    TimeGrid grid(64, 4);
    double worst_rel = 0.0;
    double worst_zero = 0.0;
    bool ok = true;
    const int draws = 2000;
    for (int i = 0; i < draws; i++) {
        double a = 2 * unit(rng);
        double b = 2 * unit(rng);
        double phi = 2 * kPi * unit(rng);
        SusceptibilityProfile medium{1.0, 0.5 + 1.5 * unit(rng), -1 + 2 * unit(rng), 0.0};
        HarmonicSpectrum numeric =
            full_spectrum(polarize(signal_and_pump(a, b, phi, grid), medium), 4).scaled(1.0 / medium.eps0);
        HarmonicSpectrum closed = predict_closed_form(a, b, phi, medium);
        for (size_t k = 0; k <= 4; k++) {
            for (auto [x, y] : {std::pair{numeric[k].c, closed[k].c}, std::pair{numeric[k].s, closed[k].s}}) {
                double diff = std::abs(x - y);
                if (y == 0.0) {
                    worst_zero = std::max(worst_zero, diff);
                    ok = ok && diff <= 1e-12;
                } else {
                    worst_rel = std::max(worst_rel, diff / std::abs(y));
                    ok = ok && diff <= std::max(1e-9 * std::abs(y), 1e-12);
                }
            }
        }
    }
    double seconds = elapsed_since(start);
    ok = ok && seconds < 5.0;
    return {ok, std::to_string(draws) + " draws, worst relative " + num(worst_rel) + ", worst zero-bin " +
                    num(worst_zero) + ", " + num(seconds) + " s"};
}

// 2. chi3 = 0 keeps everything above k = 4 empty; chi3 != 0 fills k = 5, 6 and nothing above.
Outcome band_limit() {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    TimeGrid grid(64, 4);
    double worst_chi2 = 0.0;
    double worst_chi3 = 0.0;
    double weakest_56 = INFINITY;
    for (int i = 0; i < 200; i++) {
        double a = 0.2 + 1.8 * unit(rng);
        double b = 0.2 + 1.8 * unit(rng);
        double phi = 2 * kPi * unit(rng);
        SusceptibilityProfile chi2{1.0, 1.0, -1 + 2 * unit(rng), 0.0};
        SusceptibilityProfile chi3 = chi2;
        chi3.chi3 = 0.2 + 0.5 * unit(rng);
        TimeSeries e = signal_and_pump(a, b, phi, grid);
        HarmonicSpectrum s2 = full_spectrum(polarize(e, chi2), grid.max_harmonic());
        HarmonicSpectrum s3 = full_spectrum(polarize(e, chi3), grid.max_harmonic());
        for (size_t k = 5; k <= s2.k_max(); k++) {
            worst_chi2 = std::max(worst_chi2, s2[k].magnitude());
        }
        for (size_t k = 7; k <= s3.k_max(); k++) {
            worst_chi3 = std::max(worst_chi3, s3[k].magnitude());
        }
        // k = 6 always carries chi3 B^3 / 4; k = 5 needs the fundamental too.
        weakest_56 = std::min({weakest_56, s3[5].magnitude(), s3[6].magnitude()});
    }
    bool ok = worst_chi2 < 1e-12 && worst_chi3 < 1e-12 && weakest_56 > 1e-6;
    return {ok, "chi2-only bins 5..31 max " + num(worst_chi2) + "; chi3 bins 7..31 max " + num(worst_chi3) +
                    "; weakest k=5/6 line " + num(weakest_56)};
}

// 3. Pipeline equals the raw oracle map, realization by realization.
Outcome per_realization_oracle() {
    SusceptibilityProfile medium{1.0, 1.0, 0.5, 0.0};
    TimeGrid grid(64, 4);
    auto inputs = sample_state(GaussianState::vacuum(1.0), ensemble(10000, 3), 4);
    auto outputs = propagate_ensemble(inputs, 1.0, 0.0, medium, grid, 4);
    QuadratureMap oracle = PassGain{0.5, GainMode::Raw, 0.0}.map();
    double worst = 0.0;
    for (size_t i = 0; i < inputs.size(); i++) {
        QuadraturePair expected = oracle(inputs[i]);
        worst = std::max({worst, std::abs(outputs[i].x1 - expected.x1), std::abs(outputs[i].x2 - expected.x2)});
    }
    return {worst <= 1e-10, "10000 vacuum realizations at r=0.5, worst component error " + num(worst)};
}

// 4. Phase rule: deamplified at phi = 0, amplified at phi = 90 degrees.
Outcome phase_rule() {
    TimeGrid grid(64, 4);
    double worst = 0.0;
    for (double r : {0.1, 0.3, 0.5}) {
        SusceptibilityProfile medium{1.0, 1.0, r, 0.0};
        PassGain gain{r, GainMode::Raw, 0.0};
        for (auto [phi, expected] : {std::pair{0.0, 1.0 - r}, std::pair{kPi / 2, 1.0 + r}}) {
            double a = 1.0;
            QuadraturePair out = propagate_realization(QuadraturePair::from_amplitude_phase(a, phi), 1.0, 0.0, medium, grid);
            double pipeline = std::hypot(out.x1, out.x2) / a;
            double closed = gain_of_phase(a, phi, gain);
            worst = std::max({worst, std::abs(pipeline - expected), std::abs(closed - expected)});
        }
    }
    return {worst <= 1e-9, "r in {0.1, 0.3, 0.5}, worst gain error " + num(worst)};
}

// 5. Monte-Carlo squeezing statistics at r = 0.5 and the B = 0 control.
Outcome statistics() {
    auto start = std::chrono::steady_clock::now();
    const VacuumConvention vac{1.0};
    SusceptibilityProfile medium{1.0, 1.0, 0.5, 0.0};
    TimeGrid grid(64, 4);
    auto inputs = sample_state(GaussianState::vacuum(vac.var_zp), ensemble(100000, 5), 4);
    SqueezingReport pumped =
        squeezing_report(variance_scan(propagate_ensemble(inputs, 1.0, 0.0, medium, grid, 4), default_thetas()), vac);
    SqueezingReport control =
        squeezing_report(variance_scan(propagate_ensemble(inputs, 0.0, 0.0, medium, grid, 4), default_thetas()), vac);
    double seconds = elapsed_since(start);

    double v_min = pumped.v_min / vac.var_zp;
    double v_max = pumped.v_max / vac.var_zp;
    bool ok = std::abs(v_min / 0.25 - 1.0) <= 0.02 && std::abs(v_max / 2.25 - 1.0) <= 0.02 &&
              std::abs(pumped.squeeze_db - 10 * std::log10(0.25)) <= 0.09 && std::abs(control.squeeze_db) <= 0.09 &&
              std::abs(control.antisqueeze_db) <= 0.09 && seconds < 20.0;
    return {ok, "V_min " + num(v_min) + ", V_max " + num(v_max) + ", squeeze " + num(pumped.squeeze_db) +
                    " dB, control " + num(control.squeeze_db) + "/" + num(control.antisqueeze_db) + " dB, " +
                    num(seconds) + " s"};
}

// 6. Uncertainty products: symplectic at the vacuum bound, raw at (1 - r^2)^2.
Outcome heisenberg_product() {
    const double r = 0.5;
    const VacuumConvention vac{1.0};
    PassGain symplectic{r, GainMode::Symplectic, 0.0};
    auto inputs = sample_state(GaussianState::vacuum(vac.var_zp), ensemble(100000, 6), 4);
    QuadratureMap map = symplectic.map();
    std::vector<QuadraturePair> squeezed(inputs.size());
    for (size_t i = 0; i < inputs.size(); i++) {
        squeezed[i] = map(inputs[i]);
    }
    double mc = squeezing_report(variance_scan(squeezed, default_thetas()), vac).uncertainty_product;

    GaussianState exact = single_pass(GaussianState::vacuum(vac.var_zp), symplectic);
    double det_error = std::abs(exact.cov.det() - 1.0);
    GaussianState raw = single_pass(GaussianState::vacuum(vac.var_zp), PassGain{r, GainMode::Raw, 0.0});
    double raw_product = raw.cov.along(0.0) * raw.cov.along(kPi / 2);
    double raw_error = std::abs(raw_product - std::pow(1 - r * r, 2));

    bool ok = std::abs(mc - 1.0) <= 0.03 && det_error <= 1e-10 && raw_error <= 1e-12;
    return {ok, "Monte-Carlo product " + num(mc) + ", oracle det error " + num(det_error) + ", raw product " +
                    num(raw_product) + " (error " + num(raw_error) + ")"};
}

size_t dominant_bin(const std::vector<double> &stddev, const TimeGrid &grid) {
    std::vector<double> squared(stddev.size());
    for (size_t n = 0; n < stddev.size(); n++) {
        squared[n] = stddev[n] * stddev[n];
    }
    HarmonicSpectrum spec = full_spectrum(TimeSeries(grid, squared), grid.max_harmonic());
    size_t best = 1;
    for (size_t k = 1; k <= spec.k_max(); k++) {
        if (spec[k].magnitude() > spec[best].magnitude()) {
            best = k;
        }
    }
    return best;
}

double theta_of_min_variance(const Table &scan) {
    auto theta = scan.column_values("theta_deg");
    auto var = scan.column_values("variance");
    return theta[static_cast<size_t>(std::min_element(var.begin(), var.end()) - var.begin())];
}

// 7. Figure data: envelope breathes at 2f; a 180 degree pump shift turns the squeezed quadrature.
Outcome figure_contracts() {
    RunConfig cfg;
    cfg.n_realizations = 20000;
    auto fig2 = figure_bundle("fig2", cfg, 4);
    const Table &output = fig2[2].table;
    size_t full_bin = dominant_bin(output.column_values("std"), cfg.grid());
    size_t fund_bin = dominant_bin(output.column_values("fund_std"), cfg.grid());

    double base = theta_of_min_variance(figure_bundle("fig3", cfg, 4)[3].table);
    cfg.pump_phase_deg += 180.0;
    double shifted = theta_of_min_variance(figure_bundle("fig3", cfg, 4)[3].table);
    double moved = std::remainder(shifted - base, 180.0);

    bool ok = full_bin == 2 && fund_bin == 2 && std::abs(std::abs(moved) - 90.0) < 1e-9;
    return {ok, "fig2 squared-envelope dominant bin " + std::to_string(full_bin) + " (k=1 band " +
                    std::to_string(fund_bin) + "); fig3 theta_min " + num(base) + " -> " + num(shifted) + " deg"};
}

// 8. Same config and seed give byte-identical CSV for 1 and many workers.
Outcome determinism() {
    RunConfig cfg;
    cfg.n_realizations = 5000;
    cfg.amplitude = 1.5;
    cfg.phi_deg = 20.0;
    auto scan_csv = [&](size_t workers) {
        std::stringstream out;
        std::stringstream log;
        CommandContext ctx{out, log, workers};
        cmd_scan(cfg, ctx);
        return out.str() + log.str();
    };
    auto figure_csv = [&](const char *name, size_t workers) {
        std::stringstream out;
        for (const auto &file : figure_bundle(name, cfg, workers)) {
            out << file.file_name << '\n';
            file.table.write_csv(out);
        }
        return out.str();
    };
    bool ok = scan_csv(1) == scan_csv(8);
    for (const char *name : {"fig1b", "fig2", "fig3"}) {
        ok = ok && figure_csv(name, 1) == figure_csv(name, 8);
    }
    cfg.mode = GainMode::Symplectic;
    ok = ok && scan_csv(1) == scan_csv(8);
    return {ok, "scan (raw, symplectic), fig1b, fig2, fig3 compared at 1 vs 8 workers"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"AC1 closed-form spectrum equivalence", closed_form_equivalence},
        {"AC2 band-limit theorem", band_limit},
        {"AC3 per-realization oracle equivalence", per_realization_oracle},
        {"AC4 phase rule", phase_rule},
        {"AC5 squeezing statistics", statistics},
        {"AC6 uncertainty product", heisenberg_product},
        {"AC7 figure data contracts", figure_contracts},
        {"AC8 determinism across workers", determinism},
    };
    int failures = 0;
    for (const auto &[name, run] : criteria) {
        Outcome outcome;
        try {
            outcome = run();
        } catch (const std::exception &ex) {
            outcome = {false, std::string("threw: ") + ex.what()};
        }
        std::printf("[%s] %s: %s\n", outcome.passed ? "PASS" : "FAIL", name, outcome.detail.c_str());
        std::fflush(stdout);
        failures += outcome.passed ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
