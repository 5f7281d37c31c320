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

#ifndef OPASIM_TABLE_H
#define OPASIM_TABLE_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace opasim {

/// Shortest round-trip text for 17 significant digits, '.' decimal point, independent of
/// the global locale. Negative zero prints as 0.
std::string format_number(double value);

/// Column-ordered numeric table written as CSV. Missing cells are left blank.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;

    void add_row(std::vector<std::optional<double>> row);
    size_t column(const std::string &name) const;
    /// Values of one column; blank cells become NaN.
    std::vector<double> column_values(const std::string &name) const;
    void write_csv(std::ostream &out) const;
};

}  // namespace opasim

#endif
