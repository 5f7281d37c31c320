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

#include "opasim/table.h"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace opasim {

std::string format_number(double value) {
    if (value == 0.0) {
        return "0";
    }
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, result.ptr);
}

void Table::add_row(std::vector<std::optional<double>> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("Table row width does not match its header.");
    }
    rows.push_back(std::move(row));
}

size_t Table::column(const std::string &name) const {
    for (size_t j = 0; j < columns.size(); j++) {
        if (columns[j] == name) {
            return j;
        }
    }
    throw std::out_of_range("No column named '" + name + "'.");
}

std::vector<double> Table::column_values(const std::string &name) const {
    size_t j = column(name);
    std::vector<double> out;
    out.reserve(rows.size());
    for (const auto &row : rows) {
        out.push_back(row[j].value_or(NAN));
    }
    return out;
}

void Table::write_csv(std::ostream &out) const {
    for (size_t j = 0; j < columns.size(); j++) {
        out << (j ? "," : "") << columns[j];
    }
    out << '\n';
    for (const auto &row : rows) {
        for (size_t j = 0; j < row.size(); j++) {
            if (j) {
                out << ',';
            }
            if (row[j].has_value()) {
                out << format_number(*row[j]);
            }
        }
        out << '\n';
    }
}

}  // namespace opasim
