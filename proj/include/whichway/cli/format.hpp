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
#pragma once

// Deterministic table serialization. Doubles always carry 17 significant
// digits so every value round-trips exactly.

#include <string>
#include <variant>
#include <vector>

#include "whichway/cli/config.hpp"

namespace whichway::cli {

/// Empty cells are written as nothing in CSV and null in JSON.
struct Empty {};
using Cell = std::variant<double, bool, std::string, Empty>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// %.17g equivalent via to_chars; NumericError on non-finite input.
std::string format_double(double v);

/// Header line plus one line per row, '\n' line endings.
std::string to_csv(const Table &t);

/// {"rows": [{col: value, ...}, ...]} with columns in table order.
std::string to_json(const Table &t);

/// Single JSON object with fields in the given order.
std::string to_json_object(const std::vector<std::pair<std::string, Cell>> &fields);

std::string render(const Table &t, Format f);

} // namespace whichway::cli
