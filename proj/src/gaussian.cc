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

#include "opasim/gaussian.h"

#include <algorithm>
#include <cmath>

namespace opasim {

double Covariance2::along(double theta) const {
    double c = std::cos(theta);
    double s = std::sin(theta);
    return xx * c * c + 2.0 * xy * c * s + yy * s * s;
}

bool Covariance2::is_psd() const {
    if (!std::isfinite(xx) || !std::isfinite(xy) || !std::isfinite(yy)) {
        return false;
    }
    if (xx < 0.0 || yy < 0.0) {
        return false;
    }
    // Relative slack so round-off in a congruence does not flip a singular matrix.
    double scale = std::max(xx * yy, xy * xy);
    return det() >= -1e-12 * scale;
}

QuadratureMap QuadratureMap::along_axis(double g1, double g2, double axis) {
    if (axis == 0.0) {
        return diagonal(g1, g2);
    }
    double c = std::cos(axis);
    double s = std::sin(axis);
    // R(axis) * diag(g1, g2) * R(axis)^T
    return {
        g1 * c * c + g2 * s * s,
        (g1 - g2) * c * s,
        (g1 - g2) * c * s,
        g1 * s * s + g2 * c * c,
    };
}

QuadraturePair QuadratureMap::operator()(const QuadraturePair &q) const {
    return {m11 * q.x1 + m12 * q.x2, m21 * q.x1 + m22 * q.x2};
}

Covariance2 QuadratureMap::operator()(const Covariance2 &cov) const {
    // Rows of M * cov.
    double a11 = m11 * cov.xx + m12 * cov.xy;
    double a12 = m11 * cov.xy + m12 * cov.yy;
    double a21 = m21 * cov.xx + m22 * cov.xy;
    double a22 = m21 * cov.xy + m22 * cov.yy;
    return {
        a11 * m11 + a12 * m12,
        a11 * m21 + a12 * m22,
        a21 * m21 + a22 * m22,
    };
}

QuadratureMap QuadratureMap::then(const QuadratureMap &next) const {
    return {
        next.m11 * m11 + next.m12 * m21,
        next.m11 * m12 + next.m12 * m22,
        next.m21 * m11 + next.m22 * m21,
        next.m21 * m12 + next.m22 * m22,
    };
}

}  // namespace opasim
