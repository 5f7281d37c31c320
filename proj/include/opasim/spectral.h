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

#ifndef OPASIM_SPECTRAL_H
#define OPASIM_SPECTRAL_H

#include <vector>

#include "opasim/field.h"
#include "opasim/polarization.h"

namespace opasim {

/// Spectral lines k = 0..k_max, one per order, in order.
struct HarmonicSpectrum {
    std::vector<HarmonicComponent> components;

    size_t k_max() const {
        return components.empty() ? 0 : components.size() - 1;
    }
    const HarmonicComponent &operator[](size_t k) const {
        return components[k];
    }

    /// c0^2 + 1/2 * sum_{k>=1} (c_k^2 + s_k^2), the mean square of a series band-limited to k_max.
    double mean_square() const;
    HarmonicSpectrum scaled(double factor) const;
};

/// Lock-in projection of e onto harmonic k over the whole grid:
///   k >= 1: c = (2/N) sum e[n] cos(k w t_n), s = (2/N) sum e[n] sin(k w t_n)
///   k == 0: c = (1/N) sum e[n], s = 0
/// Exact for series band-limited below samples_per_period / 2. Throws std::domain_error
/// if k would alias.
HarmonicComponent lockin_extract(const TimeSeries &e, size_t k);

HarmonicSpectrum full_spectrum(const TimeSeries &e, size_t k_max = 6);

enum class ClosedFormTerms {
    /// First-order lines of the pump and fundamental plus every second-order line.
    Total,
    /// Only the second-order polarization lines.
    SecondOrderOnly,
};

/// Closed-form spectrum of P(E) / eps0 for E = A cos(w t + phi) - B cos(2 w t) in a medium
/// with chi3 == 0:
///   k=0: chi2 (A^2 + B^2) / 2
///   k=1: chi1 A cos(w t + phi) - chi2 A B cos(w t - phi)
///   k=2: -chi1 B cos(2 w t) + chi2 A^2/2 cos(2 w t + 2 phi)
///   k=3: -chi2 A B cos(3 w t + phi)
///   k=4: chi2 B^2/2 cos(4 w t)
/// Returned with k_max = 4. Throws std::invalid_argument if chi3 != 0.
HarmonicSpectrum predict_closed_form(double amplitude, double pump, double phi, const SusceptibilityProfile &medium,
                             ClosedFormTerms terms = ClosedFormTerms::Total);

}  // namespace opasim

#endif
