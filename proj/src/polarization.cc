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

#include "opasim/polarization.h"

#include <stdexcept>

namespace opasim {

void SusceptibilityProfile::require_radiating() const {
    if (!(eps0 > 0.0)) {
        throw std::invalid_argument("eps0 must be positive.");
    }
    if (!(chi1 > 0.0)) {
        throw std::invalid_argument("chi1 must be positive to normalize the radiated field.");
    }
}

double polarization_of(double field, const SusceptibilityProfile &medium) {
    // Horner form of chi1*E + chi2*E^2 + chi3*E^3.
    return medium.eps0 * field * (medium.chi1 + field * (medium.chi2 + field * medium.chi3));
}

TimeSeries polarize(const TimeSeries &field, const SusceptibilityProfile &medium) {
    std::vector<double> out(field.size());
    auto in = field.values();
    for (size_t n = 0; n < out.size(); n++) {
        out[n] = polarization_of(in[n], medium);
    }
    return TimeSeries(field.grid(), std::move(out));
}

TimeSeries normalize_output(const TimeSeries &polarization, const SusceptibilityProfile &medium) {
    medium.require_radiating();
    double scale = medium.eps0 * medium.chi1;
    std::vector<double> out(polarization.size());
    auto in = polarization.values();
    for (size_t n = 0; n < out.size(); n++) {
        out[n] = in[n] / scale;
    }
    return TimeSeries(polarization.grid(), std::move(out));
}

size_t output_band_limit(size_t input_band, const SusceptibilityProfile &medium) {
    if (medium.chi3 != 0.0) {
        return 3 * input_band;
    }
    if (medium.chi2 != 0.0) {
        return 2 * input_band;
    }
    return input_band;
}

}  // namespace opasim
