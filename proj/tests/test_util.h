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

#ifndef OPASIM_TEST_UTIL_H
#define OPASIM_TEST_UTIL_H

#include <cstdint>
#include <random>
#include <vector>

#include "opasim/field.h"

namespace opasim::test_util {

/// Random band-limited carrier set for property tests.
inline std::vector<HarmonicComponent> random_carriers(std::mt19937_64 &rng, size_t k_top, double scale = 1.0) {
    std::uniform_real_distribution<double> amp(-scale, scale);
    std::vector<HarmonicComponent> out;
    for (size_t k = 0; k <= k_top; k++) {
        out.push_back({k, amp(rng), k == 0 ? 0.0 : amp(rng)});
    }
    return out;
}

/// Direct evaluation of sum c cos(k w t) + s sin(k w t) with std::cos on t, without the
/// grid's phase tables.
inline double direct_sum(const std::vector<HarmonicComponent> &carriers, double t) {
    double v = 0.0;
    for (const auto &h : carriers) {
        v += h.c * std::cos(static_cast<double>(h.k) * kOmega * t) + h.s * std::sin(static_cast<double>(h.k) * kOmega * t);
    }
    return v;
}

}  // namespace opasim::test_util

#endif
