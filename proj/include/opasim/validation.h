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

#ifndef OPASIM_VALIDATION_H
#define OPASIM_VALIDATION_H

#include <string>
#include <vector>

#include "opasim/config.h"

namespace opasim {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Self-check of the numerical machinery on the configured grid, medium and ensemble:
/// orthogonality, Parseval, closed-form spectrum equivalence, band limits, pipeline vs.
/// oracle per realization, vacuum flatness, minimum-uncertainty product, determinism.
std::vector<CheckResult> run_validation(const RunConfig &cfg, size_t workers = 1);

}  // namespace opasim

#endif
