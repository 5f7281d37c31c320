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

#ifndef OPASIM_ORACLE_H
#define OPASIM_ORACLE_H

#include <string_view>
#include <utility>

#include "opasim/gaussian.h"
#include "opasim/polarization.h"

namespace opasim {

enum class GainMode {
    /// (1 - r, 1 + r): the single-pass map the chi2 interference term gives literally.
    Raw,
    /// (e^-rho, e^+rho) with rho = atanh(r): same gain ratio, unit determinant.
    Symplectic,
};

std::string_view mode_name(GainMode mode);
/// Throws std::invalid_argument for anything but "raw" or "symplectic".
GainMode parse_mode(std::string_view name);

/// Normalized pump strength r = chi2 * B / chi1 of one pass through the medium.
///
/// `axis` is the quadrature phase that gets deamplified. With the pump written as
/// -B cos(2 w t + pump_phase) it is -pump_phase / 2, so the default pump deamplifies x1.
struct PassGain {
    double r = 0.0;
    GainMode mode = GainMode::Raw;
    double axis = 0.0;

    /// The gain a pump line {amplitude, phase} produces in `medium`.
    static PassGain for_pump(
        const SusceptibilityProfile &medium, double pump_amplitude, double pump_phase, GainMode mode);
    /// Symplectic gain with squeeze parameter rho (r = tanh(rho)).
    static PassGain symplectic_rho(double rho, double axis = 0.0);

    /// Throws std::domain_error outside |r| < 1, where the single-pass model no longer
    /// describes below-threshold operation.
    void validate() const;
    /// (deamplified, amplified) quadrature gains.
    std::pair<double, double> gains() const;
    QuadratureMap map() const;
};

GaussianState single_pass(const GaussianState &state, const PassGain &gain);
/// n-fold composition of single_pass. Throws std::invalid_argument for n == 0.
GaussianState iterate_passes(const GaussianState &state, const PassGain &gain, size_t n);

/// |output fundamental| / A for a coherent input A cos(w t + phi).
/// Throws std::invalid_argument unless A > 0.
double gain_of_phase(double amplitude, double phi, const PassGain &gain);

}  // namespace opasim

#endif
