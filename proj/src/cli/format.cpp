// Copyright 2026 The whichway Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "whichway/cli/format.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"
#include "whichway/errors.hpp"

namespace whichway::cli {

namespace {

std::string csv_cell(const Cell &c) {
    if (const auto *d = std::get_if<double>(&c)) {
        return format_double(*d);
    }
    if (const auto *b = std::get_if<bool>(&c)) {
        return *b ? "true" : "false";
    }
    if (const auto *s = std::get_if<std::string>(&c)) {
        return *s;
    }
    return {};
}

std::string json_string(const std::string &s) {
    return nlohmann::json(s).dump();
}

std::string json_cell(const Cell &c) {
    if (const auto *d = std::get_if<double>(&c)) {
        return format_double(*d);
    }
    if (const auto *b = std::get_if<bool>(&c)) {
        return *b ? "true" : "false";
    }
    if (const auto *s = std::get_if<std::string>(&c)) {
        return json_string(*s);
    }
    return "null";
}

} // namespace

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        detail::fail_numeric("refusing to serialize a non-finite value");
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::general, 17);
    return {buf, res.ptr};
}

std::string to_csv(const Table &t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        out += (i ? "," : "") + t.columns[i];
    }
    out += '\n';
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += csv_cell(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table &t) {
    std::string out = "{\"rows\": [";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += r ? ",\n  {" : "\n  {";
        const auto &row = t.rows[r];
        for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
            if (i) {
                out += ", ";
            }
            out += json_string(t.columns[i]) + ": " + json_cell(row[i]);
        }
        out += '}';
    }
    out += t.rows.empty() ? "]}\n" : "\n]}\n";
    return out;
}

std::string to_json_object(const std::vector<std::pair<std::string, Cell>> &fields) {
    std::string out = "{";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out += i ? ",\n  " : "\n  ";
        out += json_string(fields[i].first) + ": " + json_cell(fields[i].second);
    }
    out += "\n}\n";
    return out;
}

std::string render(const Table &t, Format f) {
    return f == Format::csv ? to_csv(t) : to_json(t);
}

} // namespace whichway::cli
