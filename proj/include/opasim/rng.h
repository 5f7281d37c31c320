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

#ifndef OPASIM_RNG_H
#define OPASIM_RNG_H

#include <cstdint>
#include <utility>

namespace opasim {

/// SplitMix64 finalizer.
uint64_t splitmix64(uint64_t x);

/// Counter-based generator: every draw is a pure function of (seed, index, lane), so a
/// realization's randomness does not depend on which thread produced it or in what order.
///
/// Transform, fixed for reproducibility:
///   bits(seed, counter) = splitmix64(splitmix64(seed) ^ splitmix64(counter))
///   u = ((bits >> 11) + 0.5) * 2^-53                      (open interval (0, 1))
///   counter = 2 * index + lane,  lane in {0, 1}
///   (z1, z2) = sqrt(-2 ln u0) * (cos(2 pi u1), sin(2 pi u1))  (Box-Muller)
class CounterNormalSource {
   public:
    explicit CounterNormalSource(uint64_t seed);

    double uniform(uint64_t index, uint64_t lane) const;
    /// Two independent standard normals for realization `index`.
    std::pair<double, double> normal_pair(uint64_t index) const;

   private:
    uint64_t key_;
};

}  // namespace opasim

#endif
