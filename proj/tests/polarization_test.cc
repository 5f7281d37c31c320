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

#include "opasim/polarization.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "opasim/spectral.h"
#include "test_util.h"

using namespace opasim;

TEST(polarization, zero_field) {
    TimeSeries zero(TimeGrid(16, 2));
    TimeSeries p = polarize(zero, {1.0, 1.3, 0.7, 0.2});
    for (double v : p.values()) {
        ASSERT_EQ(v, 0.0);
    }
}

TEST(polarization, linear_medium_is_identity) {
    std::mt19937_64 rng(1);
    TimeGrid grid(64, 4);
    TimeSeries e = synthesize(test_util::random_carriers(rng, 5), grid);
    TimeSeries p = polarize(e, {1.0, 1.0, 0.0, 0.0});
    for (size_t n = 0; n < e.size(); n++) {
        ASSERT_EQ(p[n], e[n]);
    }
}

TEST(polarization, constant_field) {
    TimeSeries e(TimeGrid(8, 1), std::vector<double>(8, 1.0));
    TimeSeries p = polarize(e, {1.0, 1.0, 1.0, 0.0});
    for (double v : p.values()) {
        ASSERT_EQ(v, 2.0);
    }
    ASSERT_EQ(polarization_of(2.0, {0.5, 1.0, 1.0, 1.0}), 0.5 * (2.0 + 4.0 + 8.0));
}

TEST(polarization, normalize_output) {
    TimeSeries p(TimeGrid(8, 1), std::vector<double>(8, 2.0));
    TimeSeries out = normalize_output(p, {1.0, 2.0, 0.0, 0.0});
    for (double v : out.values()) {
        ASSERT_EQ(v, 1.0);
    }
    ASSERT_THROW(normalize_output(p, {1.0, 0.0, 0.0, 0.0}), std::invalid_argument);
    ASSERT_THROW(normalize_output(p, {1.0, -1.0, 0.0, 0.0}), std::invalid_argument);
    ASSERT_THROW(normalize_output(p, {0.0, 1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST(polarization, normalized_linear_channel_is_identity) {
    std::mt19937_64 rng(2);
    TimeGrid grid(64, 4);
    for (auto medium : {SusceptibilityProfile{1.0, 1.0, 0.0, 0.0}, SusceptibilityProfile{3.0, 2.0, 0.0, 0.0},
                        SusceptibilityProfile{0.7, 0.3, 0.0, 0.0}}) {
        TimeSeries e = synthesize(test_util::random_carriers(rng, 8, 2.0), grid);
        TimeSeries out = normalize_output(polarize(e, medium), medium);
        for (size_t n = 0; n < e.size(); n++) {
            ASSERT_NEAR(out[n], e[n], 1e-14);
        }
    }
}

TEST(polarization, chained_fundamental_keeps_unit_amplitude) {
    // cos^2 = (1 + cos 2wt) / 2 has no fundamental content, so chi2 only feeds DC and 2w.
    SusceptibilityProfile medium{1.0, 1.0, 0.5, 0.0};
    const HarmonicComponent carriers[] = {{1, 1.0, 0.0}};
    TimeSeries out = normalize_output(polarize(synthesize(carriers, TimeGrid(64, 4)), medium), medium);
    HarmonicComponent fundamental = lockin_extract(out, 1);
    ASSERT_NEAR(fundamental.c, 1.0, 1e-14);
    ASSERT_NEAR(fundamental.s, 0.0, 1e-14);
    ASSERT_NEAR(lockin_extract(out, 0).c, 0.25, 1e-14);
    ASSERT_NEAR(lockin_extract(out, 2).c, 0.25, 1e-14);
}

TEST(polarization, output_band_limit) {
    std::mt19937_64 rng(3);
    TimeGrid grid(64, 4);
    for (auto [chi2, chi3, band] : {std::tuple{0.0, 0.0, 2u}, std::tuple{0.8, 0.0, 4u}, std::tuple{0.8, 0.4, 6u}}) {
        SusceptibilityProfile medium{1.0, 1.0, chi2, chi3};
        ASSERT_EQ(output_band_limit(2, medium), band);
        for (int trial = 0; trial < 20; trial++) {
            TimeSeries p = polarize(synthesize(test_util::random_carriers(rng, 2, 1.5), grid), medium);
            HarmonicSpectrum spec = full_spectrum(p, grid.max_harmonic());
            for (size_t k = band + 1; k <= spec.k_max(); k++) {
                ASSERT_LT(spec[k].magnitude(), 1e-12) << "k=" << k << " chi3=" << chi3;
            }
            ASSERT_GT(spec[band].magnitude(), 1e-6);
        }
    }
}

TEST(polarization, is_pointwise) {
    std::mt19937_64 rng(4);
    TimeGrid grid(32, 2);
    SusceptibilityProfile medium{1.2, 0.9, -0.4, 0.3};
    TimeSeries e = synthesize(test_util::random_carriers(rng, 6), grid);
    std::vector<size_t> perm(e.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> shuffled(e.size());
    for (size_t n = 0; n < e.size(); n++) {
        shuffled[n] = e[perm[n]];
    }
    TimeSeries p_shuffled = polarize(TimeSeries(grid, shuffled), medium);
    TimeSeries p = polarize(e, medium);
    for (size_t n = 0; n < e.size(); n++) {
        ASSERT_EQ(p_shuffled[n], p[perm[n]]);
    }
}
