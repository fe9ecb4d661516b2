// SPDX-License-Identifier: Apache-2.0
//
// janus-holo: tensor impedance holographic antenna synthesis and analysis
// Copyright (C) 2026 The janus-holo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace jha::io {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double v);

/// Fixed-point text with `decimals` digits after the point; used for SVG coordinates.
std::string format_fixed(double v, int decimals);

std::vector<std::string_view> split_csv_line(std::string_view line);

std::string_view trim(std::string_view s);

/// Parses a full field as a double. Throws ValidationError naming `what` and `line_no`.
double parse_double(std::string_view field, std::string_view what, std::size_t line_no);
long parse_long(std::string_view field, std::string_view what, std::size_t line_no);

/// Rows of a small CSV document. The first non-empty line must equal `expected_header`.
struct CsvRow {
    std::size_t line_no;
    std::vector<std::string_view> fields;
};

class CsvDocument {
public:
    CsvDocument(std::string text, std::string_view expected_header);

    const std::vector<CsvRow> &rows() const { return rows_; }

private:
    std::string text_;
    std::vector<CsvRow> rows_;
};

std::string read_file(const std::filesystem::path &path);

/// Writes `content` verbatim (binary mode, no newline translation).
void write_file(const std::filesystem::path &path, std::string_view content);

} // namespace jha::io
