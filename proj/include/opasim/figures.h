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

#ifndef OPASIM_FIGURES_H
#define OPASIM_FIGURES_H

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opasim/config.h"
#include "opasim/table.h"

namespace opasim {

/// Pointwise-in-time ensemble mean and unbiased standard deviation of a field.
struct Envelope {
    std::vector<double> mean;
    std::vector<double> stddev;
};

/// Envelopes of `n_channels` traces per realization. `trace(i, out)` fills
/// out[channel * n_samples + n] for realization i. Realizations are reduced in fixed-size
/// blocks merged in block order, so the result does not depend on `workers`.
std::vector<Envelope> trace_envelopes(
    size_t n_realizations, size_t n_samples, size_t n_channels,
    const std::function<void(size_t, std::span<double>)> &trace, size_t workers);

/// Columns theta_deg, variance, mean, squeeze_db.
Table scan_table(const QuadratureScan &scan, const VacuumConvention &convention);

struct FigureFile {
    std::string file_name;
    Table table;
};

inline constexpr std::string_view kFigureNames[] = {"fig1a", "fig1b", "fig1c", "fig1d", "fig1e", "fig2", "fig3"};

/// Displacement used by the bright-state figures: cfg.amplitude, or 3 when that is zero.
double coherent_amplitude(const RunConfig &cfg);

/// Plot data for one figure.
///
///   fig1a..fig1e  <name>.csv: t, mean, std, lower, upper of the fundamental field for the
///                 vacuum, squeezed vacuum, coherent, phase squeezed and amplitude squeezed
///                 states (minimum-uncertainty, symplectic gain |r|).
///   fig2, fig3    <name>_input.csv       t, mean, std, lower, upper of the input field
///                 <name>_characteristic.csv  field, polarization, output
///                 <name>_output.csv      t, mean, std, lower, upper of the full output and
///                                        fund_mean, fund_std, fund_lower, fund_upper of its
///                                        k=1 component
///                 <name>_scan.csv        theta_deg, variance, mean, squeeze_db of the output
///                                        quadratures over [0, 360] degrees
///
/// fig2 starts from vacuum. fig3 starts from a coherent state at phase phi with the pump at
/// 2*phi + pump_phase, so pump minima meet the fundamental's extrema at pump_phase = 0 and
/// pump_phase = 180 yields the phase-squeezed variant. Lower/upper are mean -/+ band_sigma*std.
/// Throws ConfigError for an unknown name.
std::vector<FigureFile> figure_bundle(std::string_view name, const RunConfig &cfg, size_t workers = 1);

}  // namespace opasim

#endif
