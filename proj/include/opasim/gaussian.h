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

#ifndef OPASIM_GAUSSIAN_H
#define OPASIM_GAUSSIAN_H

#include "opasim/field.h"

namespace opasim {

/// Symmetric 2x2 quadrature covariance.
struct Covariance2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    static Covariance2 isotropic(double variance) {
        return {variance, 0.0, variance};
    }
    double det() const {
        return xx * yy - xy * xy;
    }
    /// Variance of X(theta) = x1 cos(theta) + x2 sin(theta).
    double along(double theta) const;
    bool is_psd() const;

    bool operator==(const Covariance2 &other) const = default;
};

/// Real 2x2 linear map acting on (x1, x2).
struct QuadratureMap {
    double m11 = 1.0;
    double m12 = 0.0;
    double m21 = 0.0;
    double m22 = 1.0;

    static QuadratureMap diagonal(double g1, double g2) {
        return {g1, 0.0, 0.0, g2};
    }
    /// diag(g1, g2) expressed in axes rotated by `axis` (g1 acts along X(axis)).
    static QuadratureMap along_axis(double g1, double g2, double axis);

    QuadraturePair operator()(const QuadraturePair &q) const;
    /// M * cov * M^T.
    Covariance2 operator()(const Covariance2 &cov) const;
    QuadratureMap then(const QuadratureMap &next) const;
    double det() const {
        return m11 * m22 - m12 * m21;
    }
};

/// Gaussian state of the fundamental-frequency quadratures.
struct GaussianState {
    QuadraturePair mean;
    Covariance2 cov;

    static GaussianState vacuum(double var_zp) {
        return {{0.0, 0.0}, Covariance2::isotropic(var_zp)};
    }
    /// Displaced vacuum A cos(w t + phi).
    static GaussianState coherent(double amplitude, double phi, double var_zp) {
        return {QuadraturePair::from_amplitude_phase(amplitude, phi), Covariance2::isotropic(var_zp)};
    }

    GaussianState transformed(const QuadratureMap &map) const {
        return {map(mean), map(cov)};
    }
};

}  // namespace opasim

#endif
