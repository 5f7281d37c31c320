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

#include "opasim/oracle.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace opasim {

std::string_view mode_name(GainMode mode) {
    return mode == GainMode::Raw ? "raw" : "symplectic";
}

GainMode parse_mode(std::string_view name) {
    if (name == "raw") {
        return GainMode::Raw;
    }
    if (name == "symplectic") {
        return GainMode::Symplectic;
    }
    throw std::invalid_argument("Unknown gain mode '" + std::string(name) + "' (expected raw or symplectic).");
}

PassGain PassGain::for_pump(
    const SusceptibilityProfile &medium, double pump_amplitude, double pump_phase, GainMode mode) {
    medium.require_radiating();
    return {medium.chi2 * pump_amplitude / medium.chi1, mode, -0.5 * pump_phase};
}

PassGain PassGain::symplectic_rho(double rho, double axis) {
    return {std::tanh(rho), GainMode::Symplectic, axis};
}

void PassGain::validate() const {
    if (!(std::abs(r) < 1.0)) {
        throw std::domain_error(
            "Pump strength |r| = " + std::to_string(std::abs(r)) +
            " is not below threshold (|r| < 1); the single-pass model does not apply.");
    }
}

std::pair<double, double> PassGain::gains() const {
    validate();
    if (mode == GainMode::Raw) {
        return {1.0 - r, 1.0 + r};
    }
    double rho = std::atanh(r);
    return {std::exp(-rho), std::exp(rho)};
}

QuadratureMap PassGain::map() const {
    auto [g_sqz, g_amp] = gains();
    return QuadratureMap::along_axis(g_sqz, g_amp, axis);
}

GaussianState single_pass(const GaussianState &state, const PassGain &gain) {
    return state.transformed(gain.map());
}

GaussianState iterate_passes(const GaussianState &state, const PassGain &gain, size_t n) {
    if (n == 0) {
        throw std::invalid_argument("iterate_passes needs at least one pass.");
    }
    QuadratureMap one = gain.map();
    GaussianState out = state;
    for (size_t i = 0; i < n; i++) {
        out = out.transformed(one);
    }
    return out;
}

double gain_of_phase(double amplitude, double phi, const PassGain &gain) {
    if (!(amplitude > 0.0)) {
        throw std::invalid_argument("gain_of_phase needs a positive input amplitude.");
    }
    QuadraturePair out = gain.map()(QuadraturePair::from_amplitude_phase(amplitude, phi));
    return std::hypot(out.x1, out.x2) / amplitude;
}

}  // namespace opasim
