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

#include "jha/io.hpp"

#include "jha/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace jha::io {

std::string format_double(double v)
{
    if (v == 0.0)
        v = 0.0; // fold -0
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), ptr};
}

std::string format_fixed(double v, int decimals)
{
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, decimals);
    std::string s(buf.data(), ptr);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0')
            s.pop_back();
        if (s.back() == '.')
            s.pop_back();
    }
    if (s == "-0")
        s = "0";
    return s;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_csv_line(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            break;
        }
        out.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

double parse_double(std::string_view field, std::string_view what, std::size_t line_no)
{
    double v = 0.0;
    const auto *first = field.data();
    const auto *last = field.data() + field.size();
    if (!field.empty() && *first == '+')
        ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v))
        throw ValidationError("line " + std::to_string(line_no) + ": cannot parse " + std::string(what) +
                              " from '" + std::string(field) + "'");
    return v;
}

long parse_long(std::string_view field, std::string_view what, std::size_t line_no)
{
    long v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
        throw ValidationError("line " + std::to_string(line_no) + ": cannot parse " + std::string(what) +
                              " from '" + std::string(field) + "'");
    return v;
}

CsvDocument::CsvDocument(std::string text, std::string_view expected_header) : text_(std::move(text))
{
    std::string_view rest(text_);
    std::size_t line_no = 0;
    bool header_seen = false;
    const auto expected_cols = split_csv_line(expected_header).size();
    while (!rest.empty()) {
        const auto nl = rest.find('\n');
        std::string_view line = rest.substr(0, nl);
        rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#')
            continue;
        if (!header_seen) {
            if (line_no == 1 && line.starts_with("\xEF\xBB\xBF"))
                line.remove_prefix(3);
            if (line != expected_header)
                throw ValidationError("line " + std::to_string(line_no) + ": expected header '" +
                                      std::string(expected_header) + "', got '" + std::string(line) + "'");
            header_seen = true;
            continue;
        }
        auto fields = split_csv_line(line);
        if (fields.size() != expected_cols)
            throw ValidationError("line " + std::to_string(line_no) + ": expected " + std::to_string(expected_cols) +
                                  " fields, got " + std::to_string(fields.size()));
        rows_.push_back({line_no, std::move(fields)});
    }
    if (!header_seen)
        throw ValidationError("missing CSV header '" + std::string(expected_header) + "'");
}

std::string read_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ValidationError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path &path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw ValidationError("cannot write '" + path.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw ValidationError("write failed for '" + path.string() + "'");
}

} // namespace jha::io
