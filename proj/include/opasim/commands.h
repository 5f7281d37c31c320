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

#ifndef OPASIM_COMMANDS_H
#define OPASIM_COMMANDS_H

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "opasim/config.h"

namespace opasim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Where a command writes. Tables go to `out`, summaries and diagnostics to `log`.
struct CommandContext {
    std::ostream &out;
    std::ostream &log;
    size_t workers = 1;
    std::filesystem::path out_dir = ".";
    size_t k_max = 6;
    size_t passes = 1;
};

/// Numeric spectrum of the medium's polarization next to the closed form, one row per
/// harmonic. Returns kExitValidationFailure when any bin deviates by more than 1e-9
/// (relative to max(1, |closed form|)).
int cmd_spectrum(const RunConfig &cfg, const CommandContext &ctx);

/// Quadrature variance scan of the propagated ensemble (pipeline in raw mode, symplectic
/// oracle map in symplectic mode).
int cmd_scan(const RunConfig &cfg, const CommandContext &ctx);

/// Writes the CSV files of one figure into ctx.out_dir.
int cmd_figure(std::string_view name, const RunConfig &cfg, const CommandContext &ctx);

/// Closed-form single/iterated pass prediction as quantity,value rows.
int cmd_oracle(const RunConfig &cfg, const CommandContext &ctx);

int cmd_validate(const RunConfig &cfg, const CommandContext &ctx);

void print_defaults(std::ostream &out);

}  // namespace opasim

#endif
