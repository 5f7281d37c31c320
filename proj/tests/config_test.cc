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

#include <sstream>

#include "gtest/gtest.h"
#include "opasim/commands.h"

using namespace opasim;
using nlohmann::json;

TEST(config, defaults_round_trip) {
    RunConfig defaults;
    RunConfig back = config_from_json(to_json(defaults));
    ASSERT_EQ(to_json(back), to_json(defaults));

    std::stringstream printed;
    print_defaults(printed);
    ASSERT_EQ(parse_config(printed).samples_per_period, 64u);
}

TEST(config, partial_document_overlays_defaults) {
    RunConfig cfg = config_from_json(json::parse(R"({"B": 0.25, "medium": {"chi2": 2.0}, "mode": "symplectic"})"));
    ASSERT_EQ(cfg.pump, 0.25);
    ASSERT_EQ(cfg.medium.chi2, 2.0);
    ASSERT_EQ(cfg.medium.chi1, 1.0);
    ASSERT_EQ(cfg.mode, GainMode::Symplectic);
    ASSERT_EQ(cfg.n_realizations, RunConfig{}.n_realizations);
    ASSERT_DOUBLE_EQ(cfg.pass_gain().r, 0.5);
}

TEST(config, rejects_unknown_keys) {
    ASSERT_THROW(config_from_json(json::parse(R"({"gain": 1})")), ConfigError);
    ASSERT_THROW(config_from_json(json::parse(R"({"medium": {"chi4": 1}})")), ConfigError);
    ASSERT_THROW(config_from_json(json::parse(R"({"grid": {"samples": 8}})")), ConfigError);
    ASSERT_THROW(config_from_json(json::parse(R"({"ensemble": {"workers": 8}})")), ConfigError);
}

TEST(config, rejects_bad_values) {
    ASSERT_THROW(config_from_json(json::parse(R"({"B": "one"})")), ConfigError);
    ASSERT_THROW(config_from_json(json::parse(R"({"thetas": -3})")), ConfigError);
    ASSERT_THROW(config_from_json(json::parse(R"({"thetas": 1.5})")), ConfigError);
    ASSERT_THROW(config_from_json(json::parse(R"({"medium": {"chi1": 0}})")), ConfigError);
    ASSERT_THROW(config_from_json(json::parse(R"({"band_sigma": 0})")), ConfigError);
    ASSERT_THROW(config_from_json(json::parse(R"({"var_zp": -1})")), ConfigError);
    ASSERT_THROW(config_from_json(json::parse(R"({"ensemble": {"n_realizations": 1}})")), ConfigError);
    ASSERT_THROW(config_from_json(json::parse(R"({"mode": "quantum"})")), ConfigError);
    ASSERT_THROW(config_from_json(json::parse("[1, 2]")), ConfigError);
    std::stringstream broken("{\"B\": ");
    ASSERT_THROW(parse_config(broken), ConfigError);
}

TEST(config, seed_accepts_full_64_bits) {
    RunConfig cfg = config_from_json(json::parse(R"({"ensemble": {"seed": 18446744073709551615}})"));
    ASSERT_EQ(cfg.seed, 18446744073709551615ULL);
}
