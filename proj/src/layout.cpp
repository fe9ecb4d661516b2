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

#include "jha/layout.hpp"

#include "jha/constants.hpp"
#include "jha/error.hpp"
#include "jha/io.hpp"
#include "jha/log.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace jha::layout {

namespace {

constexpr std::string_view csv_header = "i,j,g_mm,w_mm,slot_angle_deg";

std::string export_json(const Layout &l)
{
    nlohmann::json cells = nlohmann::json::array();
    for (const auto &c : l.cells)
        cells.push_back({{"i", c.i},
                         {"j", c.j},
                         {"g_mm", c.g_mm},
                         {"w_mm", c.w_mm},
                         {"slot_angle_deg", c.slot_angle_deg},
                         {"degenerate", c.degenerate},
                         {"clamped", c.clamped}});
    nlohmann::json doc{{"n_cells", l.n_cells},
                       {"lattice_p_mm", l.lattice_p_mm},
                       {"board_extent_mm", l.board_extent_mm()},
                       {"slot", {{"length_mm", l.slot.length_mm}, {"width_mm", l.slot.width_mm}}},
                       {"cells", std::move(cells)}};
    return doc.dump(1) + "\n";
}

std::string export_csv(const Layout &l)
{
    std::string out(csv_header);
    out += '\n';
    for (const auto &c : l.cells)
        out += std::to_string(c.i) + ',' + std::to_string(c.j) + ',' + io::format_double(c.g_mm) + ',' +
               io::format_double(c.w_mm) + ',' + io::format_double(c.slot_angle_deg) + '\n';
    return out;
}

std::string export_svg(const Layout &l)
{
    auto f = [](double v) { return io::format_fixed(v, 6); };
    const double extent = l.board_extent_mm();
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + f(extent) + " " + f(extent) + "\" width=\"" +
           f(extent) + "mm\" height=\"" + f(extent) + "mm\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + f(extent) + "\" height=\"" + f(extent) + "\" fill=\"#1b5e20\"/>\n";
    const double p = l.lattice_p_mm;
    for (const auto &c : l.cells) {
        // SVG y runs downward; cell j = 0 is the bottom row.
        const double cx = (c.i + 0.5) * p;
        const double cy = (l.n_cells - c.j - 0.5) * p;
        out += "<g transform=\"translate(" + f(cx) + " " + f(cy) + ")\">";
        out += "<rect x=\"" + f(-0.5 * c.w_mm) + "\" y=\"" + f(-0.5 * c.w_mm) + "\" width=\"" + f(c.w_mm) +
               "\" height=\"" + f(c.w_mm) + "\" fill=\"#d4a017\"/>";
        out += "<rect x=\"" + f(-0.5 * l.slot.length_mm) + "\" y=\"" + f(-0.5 * l.slot.width_mm) + "\" width=\"" +
               f(l.slot.length_mm) + "\" height=\"" + f(l.slot.width_mm) + "\" transform=\"rotate(" +
               f(-c.slot_angle_deg) + ")\" fill=\"#1b5e20\"/>";
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace

CellGeometry realize_cell(const hologram::CellImpedance &cell, const unitcell::ZgCurve &curve, double lattice_p_mm,
                          ClampPolicy policy)
{
    CellGeometry g;
    g.i = cell.i;
    g.j = cell.j;
    g.degenerate = cell.degenerate;
    double x = cell.x_eff_max_ohm;
    if (x < curve.min_reactance() || x > curve.max_reactance()) {
        if (policy == ClampPolicy::strict) {
            try {
                (void)unitcell::invert_zg(curve, x);
            } catch (const OutOfRangeError &e) {
                throw OutOfRangeError("cell (" + std::to_string(cell.i) + ", " + std::to_string(cell.j) +
                                          "): " + e.what(),
                                      e.nearest());
            }
        }
        x = std::clamp(x, curve.min_reactance(), curve.max_reactance());
        g.clamped = true;
    }
    g.g_mm = unitcell::invert_zg(curve, x);
    if (!(g.g_mm > 0.0 && g.g_mm < lattice_p_mm))
        throw ValidationError("cell (" + std::to_string(cell.i) + ", " + std::to_string(cell.j) + "): gap " +
                              io::format_double(g.g_mm) + " mm does not fit the " + io::format_double(lattice_p_mm) +
                              " mm lattice");
    g.w_mm = lattice_p_mm - g.g_mm;
    double angle = rad_to_deg(cell.degenerate ? 0.0 : cell.direction_rad);
    angle = std::fmod(angle, 180.0);
    if (angle < 0.0)
        angle += 180.0;
    g.slot_angle_deg = angle;
    return g;
}

std::size_t Layout::clamped_count() const
{
    return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const CellGeometry &c) {
        return c.clamped;
    }));
}

Layout realize_layout(const hologram::TensorImpedanceField &field, const unitcell::ZgCurve &curve, ClampPolicy policy,
                      SlotTemplate slot)
{
    Layout l;
    l.n_cells = field.n_cells();
    l.lattice_p_mm = field.pitch_m() * 1e3;
    l.slot = slot;
    l.cells.reserve(field.cells().size());
    for (const auto &c : field.cells())
        l.cells.push_back(realize_cell(c, curve, l.lattice_p_mm, policy));
    if (const auto n = l.clamped_count(); n > 0)
        log::warn(std::to_string(n) + " cell(s) had impedances outside the Z(g) curve range [" +
                  io::format_double(curve.min_reactance()) + ", " + io::format_double(curve.max_reactance()) +
                  "] ohm and were clamped");
    return l;
}

const std::vector<std::string> &export_formats()
{
    static const std::vector<std::string> formats{"json", "csv", "svg"};
    return formats;
}

std::string export_layout(const Layout &layout, std::string_view format)
{
    if (format == "json")
        return export_json(layout);
    if (format == "csv")
        return export_csv(layout);
    if (format == "svg")
        return export_svg(layout);
    std::string supported;
    for (const auto &f : export_formats())
        supported += (supported.empty() ? "" : ", ") + f;
    throw UsageError("unsupported layout format '" + std::string(format) + "'; supported: " + supported);
}

Layout parse_layout_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
        Layout l;
        l.n_cells = doc.at("n_cells").get<int>();
        l.lattice_p_mm = doc.at("lattice_p_mm").get<double>();
        l.slot.length_mm = doc.at("slot").at("length_mm").get<double>();
        l.slot.width_mm = doc.at("slot").at("width_mm").get<double>();
        for (const auto &c : doc.at("cells")) {
            l.cells.push_back({c.at("i").get<int>(), c.at("j").get<int>(), c.at("w_mm").get<double>(),
                               c.at("g_mm").get<double>(), c.at("slot_angle_deg").get<double>(),
                               c.at("degenerate").get<bool>(), c.at("clamped").get<bool>()});
        }
        return l;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("layout JSON: ") + e.what());
    }
}

Layout parse_layout_csv(std::string_view text, double lattice_p_mm, SlotTemplate slot)
{
    io::CsvDocument doc{std::string(text), csv_header};
    Layout l;
    l.lattice_p_mm = lattice_p_mm;
    l.slot = slot;
    for (const auto &row : doc.rows()) {
        CellGeometry c;
        c.i = static_cast<int>(io::parse_long(row.fields[0], "i", row.line_no));
        c.j = static_cast<int>(io::parse_long(row.fields[1], "j", row.line_no));
        c.g_mm = io::parse_double(row.fields[2], "g_mm", row.line_no);
        c.w_mm = io::parse_double(row.fields[3], "w_mm", row.line_no);
        c.slot_angle_deg = io::parse_double(row.fields[4], "slot_angle_deg", row.line_no);
        l.cells.push_back(c);
    }
    const auto n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(l.cells.size()))));
    if (static_cast<std::size_t>(n) * n != l.cells.size())
        throw ValidationError("layout CSV does not describe a square grid");
    l.n_cells = n;
    return l;
}

} // namespace jha::layout
