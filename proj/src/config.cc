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

#include "opasim/config.h"

#include <cmath>
#include <istream>
#include <numbers>
#include <set>

namespace opasim {

using nlohmann::json;

namespace {

double deg_to_rad(double deg) {
    return deg * std::numbers::pi / 180.0;
}

void reject_unknown_keys(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    if (!obj.is_object()) {
        throw ConfigError("Config " + where + " must be a JSON object.");
    }
    for (const auto &[key, value] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError("Unknown config key '" + where + key + "'.");
        }
    }
}

template <typename T>
void read(const json &obj, const char *key, T &out, const std::string &where) {
    if (!obj.contains(key)) {
        return;
    }
    const json &v = obj.at(key);
    if constexpr (std::is_floating_point_v<T>) {
        if (!v.is_number()) {
            throw ConfigError("Config key '" + where + key + "' must be a number.");
        }
    } else if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<int64_t>() >= 0)) {
            throw ConfigError("Config key '" + where + key + "' must be a non-negative integer.");
        }
    } else {
        if (!v.is_string()) {
            throw ConfigError("Config key '" + where + key + "' must be a string.");
        }
    }
    out = v.get<T>();
}

}  // namespace

void RunConfig::validate() const {
    if (!(medium.eps0 > 0.0)) {
        throw ConfigError("medium.eps0 must be positive.");
    }
    if (!(medium.chi1 > 0.0)) {
        throw ConfigError("medium.chi1 must be positive.");
    }
    if (samples_per_period < 2 || n_periods < 1) {
        throw ConfigError("grid needs samples_per_period >= 2 and n_periods >= 1.");
    }
    if (n_realizations < 2) {
        throw ConfigError("ensemble.n_realizations must be at least 2.");
    }
    if (thetas < 2) {
        throw ConfigError("thetas must be at least 2.");
    }
    if (!(band_sigma > 0.0)) {
        throw ConfigError("band_sigma must be positive.");
    }
    if (!(var_zp > 0.0)) {
        throw ConfigError("var_zp must be positive.");
    }
    for (double v : {amplitude, phi_deg, pump, pump_phase_deg, medium.chi2, medium.chi3}) {
        if (!std::isfinite(v)) {
            throw ConfigError("Config values must be finite.");
        }
    }
}

double RunConfig::phi() const {
    return deg_to_rad(phi_deg);
}

double RunConfig::pump_phase() const {
    return deg_to_rad(pump_phase_deg);
}

TimeGrid RunConfig::grid() const {
    return TimeGrid(samples_per_period, n_periods);
}

EnsembleConfig RunConfig::ensemble() const {
    return {n_realizations, seed, grid(), convention()};
}

PassGain RunConfig::pass_gain() const {
    return PassGain::for_pump(medium, pump, pump_phase(), mode);
}

json to_json(const RunConfig &cfg) {
    return json{
        {"medium",
         {{"eps0", cfg.medium.eps0}, {"chi1", cfg.medium.chi1}, {"chi2", cfg.medium.chi2}, {"chi3", cfg.medium.chi3}}},
        {"A", cfg.amplitude},
        {"phi_deg", cfg.phi_deg},
        {"B", cfg.pump},
        {"pump_phase_deg", cfg.pump_phase_deg},
        {"grid", {{"samples_per_period", cfg.samples_per_period}, {"n_periods", cfg.n_periods}}},
        {"ensemble", {{"n_realizations", cfg.n_realizations}, {"seed", cfg.seed}}},
        {"thetas", cfg.thetas},
        {"mode", std::string(mode_name(cfg.mode))},
        {"band_sigma", cfg.band_sigma},
        {"var_zp", cfg.var_zp},
    };
}

RunConfig config_from_json(const json &doc, const RunConfig &base) {
    RunConfig cfg = base;
    reject_unknown_keys(
        doc,
        {"medium", "A", "phi_deg", "B", "pump_phase_deg", "grid", "ensemble", "thetas", "mode", "band_sigma", "var_zp"},
        "");
    if (doc.contains("medium")) {
        const json &m = doc.at("medium");
        reject_unknown_keys(m, {"eps0", "chi1", "chi2", "chi3"}, "medium.");
        read(m, "eps0", cfg.medium.eps0, "medium.");
        read(m, "chi1", cfg.medium.chi1, "medium.");
        read(m, "chi2", cfg.medium.chi2, "medium.");
        read(m, "chi3", cfg.medium.chi3, "medium.");
    }
    read(doc, "A", cfg.amplitude, "");
    read(doc, "phi_deg", cfg.phi_deg, "");
    read(doc, "B", cfg.pump, "");
    read(doc, "pump_phase_deg", cfg.pump_phase_deg, "");
    if (doc.contains("grid")) {
        const json &g = doc.at("grid");
        reject_unknown_keys(g, {"samples_per_period", "n_periods"}, "grid.");
        read(g, "samples_per_period", cfg.samples_per_period, "grid.");
        read(g, "n_periods", cfg.n_periods, "grid.");
    }
    if (doc.contains("ensemble")) {
        const json &e = doc.at("ensemble");
        reject_unknown_keys(e, {"n_realizations", "seed"}, "ensemble.");
        read(e, "n_realizations", cfg.n_realizations, "ensemble.");
        read(e, "seed", cfg.seed, "ensemble.");
    }
    read(doc, "thetas", cfg.thetas, "");
    if (doc.contains("mode")) {
        std::string mode;
        read(doc, "mode", mode, "");
        try {
            cfg.mode = parse_mode(mode);
        } catch (const std::invalid_argument &ex) {
            throw ConfigError(ex.what());
        }
    }
    read(doc, "band_sigma", cfg.band_sigma, "");
    read(doc, "var_zp", cfg.var_zp, "");
    cfg.validate();
    return cfg;
}

RunConfig parse_config(std::istream &in, const RunConfig &base) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &ex) {
        throw ConfigError(std::string("Config is not valid JSON: ") + ex.what());
    }
    return config_from_json(doc, base);
}

}  // namespace opasim
