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

#ifndef OPASIM_ENSEMBLE_H
#define OPASIM_ENSEMBLE_H

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "opasim/field.h"
#include "opasim/gaussian.h"
#include "opasim/polarization.h"

namespace opasim {

/// Vacuum quadrature variance (Delta_zp^2), shared by both quadratures.
struct VacuumConvention {
    double var_zp = 1.0;

    void validate() const;
};

struct EnsembleConfig {
    size_t n_realizations = 10000;
    uint64_t seed = 1;
    TimeGrid grid{};
    VacuumConvention convention{};

    void validate() const;
};

/// Variance and mean of X(theta) over an ensemble, per quadrature phase.
struct QuadratureScan {
    std::vector<double> thetas;
    std::vector<double> variances;
    std::vector<double> means;
};

struct SqueezingReport {
    double v_min = 0.0;
    double theta_min = 0.0;
    double v_max = 0.0;
    double theta_max = 0.0;
    double squeeze_db = 0.0;
    double antisqueeze_db = 0.0;
    /// V(theta_min) * V(theta_min + pi/2).
    double uncertainty_product = 0.0;
};

/// Runs body(i) for i in [0, count) on up to `workers` threads. Each index is visited
/// exactly once; results must be written by index to stay independent of scheduling.
void parallel_for(size_t count, size_t workers, const std::function<void(size_t)> &body);

/// i.i.d. draws from `state`; draw i depends only on (cfg.seed, i).
/// Throws std::invalid_argument if the covariance is not positive semi-definite.
std::vector<QuadraturePair> sample_state(const GaussianState &state, const EnsembleConfig &cfg, size_t workers = 1);

/// Normalized output field of the medium for the fundamental `q` plus the pump line.
TimeSeries output_field(
    const QuadraturePair &q, double pump_amplitude, double pump_phase, const SusceptibilityProfile &medium,
    const TimeGrid &grid);

/// Fundamental quadratures after one pass: synthesize fundamental + pump, polarize,
/// normalize, lock in on k=1. Throws std::domain_error if the grid cannot resolve the
/// output band, or std::invalid_argument for a non-radiating medium.
QuadraturePair propagate_realization(
    const QuadraturePair &q, double pump_amplitude, double pump_phase, const SusceptibilityProfile &medium,
    const TimeGrid &grid);

std::vector<QuadraturePair> propagate_ensemble(
    std::span<const QuadraturePair> inputs, double pump_amplitude, double pump_phase,
    const SusceptibilityProfile &medium, const TimeGrid &grid, size_t workers = 1);

/// `count` phases evenly spanning [0, span] inclusive of both ends.
std::vector<double> theta_grid(size_t count, double span);
/// 181 phases at 1 degree steps over [0, pi].
std::vector<double> default_thetas();

/// Unbiased (n-1) variance and mean of X(theta) for each theta.
/// Throws std::invalid_argument for fewer than two pairs.
QuadratureScan variance_scan(std::span<const QuadraturePair> pairs, std::span<const double> thetas);

/// Extremes of the scan relative to the vacuum level. The orthogonal partner of theta_min
/// is the scan point nearest theta_min + pi/2 modulo pi (V has period pi).
/// Throws std::invalid_argument for an empty scan or var_zp <= 0.
SqueezingReport squeezing_report(const QuadratureScan &scan, const VacuumConvention &convention);

}  // namespace opasim

#endif
