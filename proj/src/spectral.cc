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

#include "opasim/spectral.h"

#include <cmath>
#include <stdexcept>

namespace opasim {

double HarmonicSpectrum::mean_square() const {
    double total = 0.0;
    for (const auto &h : components) {
        if (h.k == 0) {
            total += h.c * h.c;
        } else {
            total += 0.5 * (h.c * h.c + h.s * h.s);
        }
    }
    return total;
}

HarmonicSpectrum HarmonicSpectrum::scaled(double factor) const {
    HarmonicSpectrum out = *this;
    for (auto &h : out.components) {
        h.c *= factor;
        h.s *= factor;
    }
    return out;
}

HarmonicComponent lockin_extract(const TimeSeries &e, size_t k) {
    const TimeGrid &grid = e.grid();
    grid.require_resolvable(k);
    auto values = e.values();
    double n_total = static_cast<double>(values.size());
    if (k == 0) {
        double sum = 0.0;
        for (double v : values) {
            sum += v;
        }
        return {0, sum / n_total, 0.0};
    }
    double sum_c = 0.0;
    double sum_s = 0.0;
    for (size_t n = 0; n < values.size(); n++) {
        sum_c += values[n] * grid.cos_at(k, n);
        sum_s += values[n] * grid.sin_at(k, n);
    }
    return {k, 2.0 * sum_c / n_total, 2.0 * sum_s / n_total};
}

HarmonicSpectrum full_spectrum(const TimeSeries &e, size_t k_max) {
    e.grid().require_resolvable(k_max);
    HarmonicSpectrum out;
    out.components.reserve(k_max + 1);
    for (size_t k = 0; k <= k_max; k++) {
        out.components.push_back(lockin_extract(e, k));
    }
    return out;
}

HarmonicSpectrum predict_closed_form(
    double amplitude, double pump, double phi, const SusceptibilityProfile &medium, ClosedFormTerms terms) {
    if (medium.chi3 != 0.0) {
        throw std::invalid_argument("predict_closed_form has no closed form for chi3 != 0.");
    }
    const double a = amplitude;
    const double b = pump;
    const double chi1 = terms == ClosedFormTerms::Total ? medium.chi1 : 0.0;
    const double chi2 = medium.chi2;
    const double cp = std::cos(phi);
    const double sp = std::sin(phi);
    const double c2p = std::cos(2 * phi);
    const double s2p = std::sin(2 * phi);

    HarmonicSpectrum out;
    out.components = {
        {0, 0.5 * chi2 * (a * a + b * b), 0.0},
        {1, chi1 * a * cp - chi2 * a * b * cp, -chi1 * a * sp - chi2 * a * b * sp},
        {2, -chi1 * b + 0.5 * chi2 * a * a * c2p, -0.5 * chi2 * a * a * s2p},
        {3, -chi2 * a * b * cp, chi2 * a * b * sp},
        {4, 0.5 * chi2 * b * b, 0.0},
    };
    return out;
}

}  // namespace opasim
