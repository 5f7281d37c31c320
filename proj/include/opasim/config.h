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

#ifndef OPASIM_CONFIG_H
#define OPASIM_CONFIG_H

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "opasim/ensemble.h"
#include "opasim/oracle.h"
#include "opasim/polarization.h"

namespace opasim {

/// Bad configuration or usage. Maps to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything one CLI run needs. Angles are in degrees here and radians everywhere else.
struct RunConfig {
    SusceptibilityProfile medium{1.0, 1.0, 0.5, 0.0};
    double amplitude = 0.0;
    double phi_deg = 0.0;
    double pump = 1.0;
    double pump_phase_deg = 0.0;
    size_t samples_per_period = 64;
    size_t n_periods = 4;
    size_t n_realizations = 10000;
    uint64_t seed = 1;
    size_t thetas = 181;
    GainMode mode = GainMode::Raw;
    double band_sigma = 1.0;
    double var_zp = 1.0;

    /// Throws ConfigError on any out-of-range field.
    void validate() const;

    double phi() const;
    double pump_phase() const;
    TimeGrid grid() const;
    VacuumConvention convention() const {
        return {var_zp};
    }
    EnsembleConfig ensemble() const;
    PassGain pass_gain() const;
};

nlohmann::json to_json(const RunConfig &cfg);

/// Overlays the keys present in `doc` onto `base`. Unknown keys, wrong types and
/// out-of-range values throw ConfigError.
RunConfig config_from_json(const nlohmann::json &doc, const RunConfig &base = RunConfig{});
RunConfig parse_config(std::istream &in, const RunConfig &base = RunConfig{});

}  // namespace opasim

#endif
