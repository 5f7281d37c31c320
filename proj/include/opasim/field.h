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

#ifndef OPASIM_FIELD_H
#define OPASIM_FIELD_H

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

namespace opasim {

/// Fundamental angular frequency. One fundamental period is one time unit.
inline constexpr double kOmega = 2.0 * std::numbers::pi;

/// Uniform, left-aligned sampling of an integer number of fundamental periods.
///
/// Sample n sits at t_n = n / samples_per_period. The endpoint of the last period is
/// excluded, which makes the discrete cos/sin bases exactly orthogonal for every
/// harmonic below samples_per_period / 2.
class TimeGrid {
   public:
    TimeGrid(size_t samples_per_period = 64, size_t n_periods = 4);

    size_t samples_per_period() const {
        return samples_per_period_;
    }
    size_t n_periods() const {
        return n_periods_;
    }
    size_t size() const {
        return samples_per_period_ * n_periods_;
    }
    double time(size_t n) const;

    /// Highest harmonic order that can be synthesized or extracted without aliasing.
    size_t max_harmonic() const {
        return (samples_per_period_ - 1) / 2;
    }
    /// Throws std::domain_error if harmonic k would alias on this grid.
    void require_resolvable(size_t k) const;

    /// cos(k*omega*t_n) and sin(k*omega*t_n), with the argument reduced to an exact
    /// integer phase index (k*n mod samples_per_period) before evaluation.
    double cos_at(size_t k, size_t n) const;
    double sin_at(size_t k, size_t n) const;

    bool operator==(const TimeGrid &other) const = default;

   private:
    size_t samples_per_period_;
    size_t n_periods_;
    // One period of the unit-frequency basis, indexed by phase step.
    std::vector<double> cos_table_;
    std::vector<double> sin_table_;
};

/// Sampled real field on a grid.
class TimeSeries {
   public:
    explicit TimeSeries(TimeGrid grid);
    TimeSeries(TimeGrid grid, std::vector<double> values);

    const TimeGrid &grid() const {
        return grid_;
    }
    std::span<const double> values() const {
        return values_;
    }
    size_t size() const {
        return values_.size();
    }
    double operator[](size_t n) const {
        return values_[n];
    }

    TimeSeries operator+(const TimeSeries &other) const;

   private:
    TimeGrid grid_;
    std::vector<double> values_;
};

/// One spectral line: c*cos(k*omega*t) + s*sin(k*omega*t).
struct HarmonicComponent {
    size_t k = 0;
    double c = 0.0;
    double s = 0.0;

    /// Throws std::invalid_argument if a DC line carries a sine part.
    static HarmonicComponent checked(size_t k, double c, double s);

    double magnitude() const;
    /// The phi in magnitude*cos(k*omega*t - phi).
    double phase() const;

    bool operator==(const HarmonicComponent &other) const = default;
};

/// Quadrature amplitudes of the fundamental: x1*cos(omega*t) + x2*sin(omega*t).
struct QuadraturePair {
    double x1 = 0.0;
    double x2 = 0.0;

    /// The pair describing A*cos(omega*t + phi).
    static QuadraturePair from_amplitude_phase(double amplitude, double phi);

    /// X(theta) = x1*cos(theta) + x2*sin(theta).
    double rotated(double theta) const;

    bool operator==(const QuadraturePair &other) const = default;
};

/// Pump line B*cos(2*omega*t + pump_phase) with the sign convention -B*cos(2*omega*t) at
/// pump_phase = 0, i.e. {k=2, c=-B*cos(pump_phase), s=B*sin(pump_phase)}.
HarmonicComponent pump_carrier(double amplitude, double pump_phase);

HarmonicComponent quadratures_to_carrier(const QuadraturePair &q);
/// Throws std::invalid_argument unless carrier.k == 1.
QuadraturePair carrier_to_quadratures(const HarmonicComponent &carrier);

/// values[n] = sum over carriers of c*cos(k*omega*t_n) + s*sin(k*omega*t_n).
/// Throws std::domain_error if any carrier would alias on the grid.
TimeSeries synthesize(std::span<const HarmonicComponent> carriers, const TimeGrid &grid);

}  // namespace opasim

#endif
