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

#include "opasim/rng.h"

#include <cmath>
#include <numbers>

namespace opasim {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

CounterNormalSource::CounterNormalSource(uint64_t seed) : key_(splitmix64(seed)) {
}

double CounterNormalSource::uniform(uint64_t index, uint64_t lane) const {
    uint64_t bits = splitmix64(key_ ^ splitmix64(2 * index + lane));
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1p-53;
}

std::pair<double, double> CounterNormalSource::normal_pair(uint64_t index) const {
    double u0 = uniform(index, 0);
    double u1 = uniform(index, 1);
    double radius = std::sqrt(-2.0 * std::log(u0));
    double angle = 2.0 * std::numbers::pi * u1;
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace opasim
