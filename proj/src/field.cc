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

#include "opasim/field.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace opasim {

TimeGrid::TimeGrid(size_t samples_per_period, size_t n_periods)
    : samples_per_period_(samples_per_period), n_periods_(n_periods) {
    if (samples_per_period == 0 || n_periods == 0) {
        throw std::invalid_argument("TimeGrid needs positive samples_per_period and n_periods.");
    }
    cos_table_.resize(samples_per_period);
    sin_table_.resize(samples_per_period);
    for (size_t j = 0; j < samples_per_period; j++) {
        double angle = kOmega * static_cast<double>(j) / static_cast<double>(samples_per_period);
        cos_table_[j] = std::cos(angle);
        sin_table_[j] = std::sin(angle);
    }
}

double TimeGrid::time(size_t n) const {
    return static_cast<double>(n) / static_cast<double>(samples_per_period_);
}

void TimeGrid::require_resolvable(size_t k) const {
    if (2 * k >= samples_per_period_) {
        throw std::domain_error(
            "Harmonic " + std::to_string(k) + " aliases on a grid with " + std::to_string(samples_per_period_) +
            " samples per period (need k < samples_per_period / 2).");
    }
}

double TimeGrid::cos_at(size_t k, size_t n) const {
    return cos_table_[(k * n) % samples_per_period_];
}

double TimeGrid::sin_at(size_t k, size_t n) const {
    return sin_table_[(k * n) % samples_per_period_];
}

TimeSeries::TimeSeries(TimeGrid grid) : grid_(std::move(grid)), values_(grid_.size(), 0.0) {
}

TimeSeries::TimeSeries(TimeGrid grid, std::vector<double> values) : grid_(std::move(grid)), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
        throw std::invalid_argument("TimeSeries length does not match its grid.");
    }
}

TimeSeries TimeSeries::operator+(const TimeSeries &other) const {
    if (!(grid_ == other.grid_)) {
        throw std::invalid_argument("Cannot add time series on different grids.");
    }
    std::vector<double> sum(values_.size());
    for (size_t n = 0; n < sum.size(); n++) {
        sum[n] = values_[n] + other.values_[n];
    }
    return TimeSeries(grid_, std::move(sum));
}

HarmonicComponent HarmonicComponent::checked(size_t k, double c, double s) {
    if (k == 0 && s != 0.0) {
        throw std::invalid_argument("A DC component has no sine part.");
    }
    return {k, c, s};
}

double HarmonicComponent::magnitude() const {
    return std::hypot(c, s);
}

double HarmonicComponent::phase() const {
    if (c == 0.0 && s == 0.0) {
        return 0.0;
    }
    return std::atan2(s, c);
}

QuadraturePair QuadraturePair::from_amplitude_phase(double amplitude, double phi) {
    return {amplitude * std::cos(phi), -amplitude * std::sin(phi)};
}

double QuadraturePair::rotated(double theta) const {
    return x1 * std::cos(theta) + x2 * std::sin(theta);
}

HarmonicComponent pump_carrier(double amplitude, double pump_phase) {
    return {2, -amplitude * std::cos(pump_phase), amplitude * std::sin(pump_phase)};
}

HarmonicComponent quadratures_to_carrier(const QuadraturePair &q) {
    return {1, q.x1, q.x2};
}

QuadraturePair carrier_to_quadratures(const HarmonicComponent &carrier) {
    if (carrier.k != 1) {
        throw std::invalid_argument(
            "Only the fundamental (k=1) carries quadratures, got k=" + std::to_string(carrier.k) + ".");
    }
    return {carrier.c, carrier.s};
}

TimeSeries synthesize(std::span<const HarmonicComponent> carriers, const TimeGrid &grid) {
    for (const auto &h : carriers) {
        grid.require_resolvable(h.k);
    }
    std::vector<double> values(grid.size(), 0.0);
    for (const auto &h : carriers) {
        for (size_t n = 0; n < values.size(); n++) {
            values[n] += h.c * grid.cos_at(h.k, n) + h.s * grid.sin_at(h.k, n);
        }
    }
    return TimeSeries(grid, std::move(values));
}

}  // namespace opasim
