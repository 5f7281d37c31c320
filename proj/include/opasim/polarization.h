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

#ifndef OPASIM_POLARIZATION_H
#define OPASIM_POLARIZATION_H

#include "opasim/field.h"

namespace opasim {

/// Flat (dispersionless) susceptibilities of the medium, in normalized units.
struct SusceptibilityProfile {
    double eps0 = 1.0;
    double chi1 = 1.0;
    double chi2 = 0.0;
    double chi3 = 0.0;

    /// Throws std::invalid_argument unless eps0 > 0 and chi1 > 0, which the radiated
    /// field normalization requires.
    void require_radiating() const;
};

/// Pointwise P(E) = eps0 * (chi1*E + chi2*E^2 + chi3*E^3).
double polarization_of(double field, const SusceptibilityProfile &medium);

TimeSeries polarize(const TimeSeries &field, const SusceptibilityProfile &medium);

/// Radiated output field, taken as P / (eps0 * chi1) so a linear medium is the identity channel.
TimeSeries normalize_output(const TimeSeries &polarization, const SusceptibilityProfile &medium);

/// Highest harmonic polarize() can produce from an input band-limited to input_band.
size_t output_band_limit(size_t input_band, const SusceptibilityProfile &medium);

}  // namespace opasim

#endif
