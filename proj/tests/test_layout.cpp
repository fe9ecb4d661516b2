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

#include "jha/constants.hpp"
#include "jha/design_spec.hpp"
#include "jha/error.hpp"
#include "jha/hologram.hpp"
#include "jha/layout.hpp"
#include "jha/log.hpp"
#include "jha/unitcell.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <regex>

using namespace jha;
using namespace jha::layout;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

const unitcell::ZgCurve &synthetic_curve()
{
    static const auto curve = [] {
        const unitcell::SyntheticCellModel model;
        return unitcell::build_zg_curve(unitcell::synthetic_dispersion_table(model, {11.75}), 11.75);
    }();
    return curve;
}

hologram::CellImpedance cell_with(double x_eff, double angle_rad, bool degenerate = false)
{
    hologram::CellImpedance c;
    c.i = 3;
    c.j = 4;
    c.x_eff_max_ohm = x_eff;
    c.direction_rad = angle_rad;
    c.degenerate = degenerate;
    return c;
}

struct Silence {
    std::vector<std::string> messages;
    log::Sink previous;
    Silence() { previous = log::set_warning_sink([this](std::string_view m) { messages.emplace_back(m); }); }
    ~Silence() { log::set_warning_sink(previous); }
};

} // namespace

TEST_CASE("realize_cell at curve knots")
{
    const auto &curve = synthetic_curve();
    for (const auto &k : curve.knots()) {
        const auto g = realize_cell(cell_with(k.x_eff_ohm, 0.4), curve, 3.0);
        CHECK(g.g_mm == k.gap_mm);
        CHECK(g.w_mm + g.g_mm == 3.0);
        CHECK_THAT(g.slot_angle_deg, WithinAbs(rad_to_deg(0.4), 1e-12));
        CHECK_FALSE(g.clamped);
    }
}

TEST_CASE("realize_cell degenerate and clamped cells")
{
    const auto &curve = synthetic_curve();
    const auto d = realize_cell(cell_with(250.0, 0.0, true), curve, 3.0);
    CHECK(d.degenerate);
    CHECK(d.slot_angle_deg == 0.0);

    const auto hi = realize_cell(cell_with(curve.max_reactance() + 50.0, 1.0), curve, 3.0);
    CHECK(hi.clamped);
    CHECK(hi.g_mm == curve.min_gap());
    try {
        (void)realize_cell(cell_with(curve.max_reactance() + 50.0, 1.0), curve, 3.0, ClampPolicy::strict);
        FAIL("expected OutOfRangeError");
    } catch (const OutOfRangeError &e) {
        CHECK(e.nearest() == curve.max_reactance());
        CHECK_THAT(e.what(), ContainsSubstring("(3, 4)"));
    }
    // A curve whose gaps exceed the lattice cannot be realised.
    const unitcell::ZgCurve wide({{1.0, 400.0}, {4.0, 100.0}});
    CHECK_THROWS_AS(realize_cell(cell_with(150.0, 0.0), wide, 3.0), ValidationError);
}

TEST_CASE("slot angle folds into [0, 180)")
{
    const auto &curve = synthetic_curve();
    for (double a : {-0.3, 0.0, 1.0, pi - 1e-9, pi, 4.0}) {
        const auto g = realize_cell(cell_with(300.0, a), curve, 3.0);
        CHECK(g.slot_angle_deg >= 0.0);
        CHECK(g.slot_angle_deg < 180.0);
    }
}

TEST_CASE("larger impedance never maps to a larger gap")
{
    const auto &curve = synthetic_curve();
    double prev_gap = 1e9;
    for (double x = curve.min_reactance(); x <= curve.max_reactance(); x += 0.37) {
        const double g = realize_cell(cell_with(x, 0.0), curve, 3.0).g_mm;
        CHECK(g <= prev_gap);
        prev_gap = g;
    }
}

TEST_CASE("Design I layout")
{
    const auto spec = DesignSpec::design_i();
    const auto field = hologram::synthesize_field(spec);
    Silence quiet;
    const auto lay = realize_layout(field, synthetic_curve());
    CHECK(lay.n_cells == 70);
    CHECK(lay.cells.size() == 4900);
    CHECK_THAT(lay.board_extent_mm(), WithinAbs(210.0, 1e-9));
    for (const auto &c : lay.cells) {
        CHECK(c.g_mm > 0.0);
        CHECK(c.g_mm < 3.0);
        CHECK(c.w_mm + c.g_mm == 3.0);
        const auto &src = field.at(c.i, c.j);
        CHECK(c.degenerate == src.degenerate);
    }
    CHECK(lay.clamped_count() == 0);
    CHECK(quiet.messages.empty());

    SECTION("exports are byte-stable and round-trip")
    {
        for (const auto &fmt : export_formats())
            CHECK(export_layout(lay, fmt) == export_layout(realize_layout(field, synthetic_curve()), fmt));
        CHECK(parse_layout_json(export_layout(lay, "json")) == lay);
        auto stripped = lay;
        for (auto &c : stripped.cells)
            c.degenerate = c.clamped = false;
        CHECK(parse_layout_csv(export_layout(lay, "csv"), 3.0) == stripped);
        const auto svg = export_layout(lay, "svg");
        CHECK_THAT(svg, ContainsSubstring("viewBox=\"0 0 210 210\""));
    }
}

TEST_CASE("clamping warns once with the clamped count")
{
    auto spec = DesignSpec::design_i();
    spec.n_cells = 10;
    const auto field = hologram::synthesize_field(spec);
    const unitcell::ZgCurve narrow({{0.5, 330.0}, {1.5, 250.0}});
    Silence quiet;
    const auto lay = realize_layout(field, narrow);
    CHECK(lay.clamped_count() > 0);
    REQUIRE(quiet.messages.size() == 1);
    CHECK_THAT(quiet.messages[0], ContainsSubstring(std::to_string(lay.clamped_count()) + " cell(s)"));
    CHECK_THROWS_AS(realize_layout(field, narrow, ClampPolicy::strict), OutOfRangeError);
}

TEST_CASE("2x2 SVG geometry")
{
    Layout lay;
    lay.n_cells = 2;
    lay.lattice_p_mm = 3.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            lay.cells.push_back({i, j, 2.5, 0.5, 45.0 * (i + 2 * j), false, false});
    const auto svg = export_layout(lay, "svg");
    CHECK_THAT(svg, ContainsSubstring("viewBox=\"0 0 6 6\""));
    const std::regex group("<g ");
    CHECK(std::distance(std::sregex_iterator(svg.begin(), svg.end(), group), std::sregex_iterator()) == 4);
    CHECK_THAT(svg, ContainsSubstring("translate(1.5 4.5)")); // cell (0, 0) is bottom left
    CHECK_THAT(svg, ContainsSubstring("rotate(-135)"));
}

TEST_CASE("unsupported export format lists the choices")
{
    try {
        (void)export_layout(Layout{}, "gerber");
        FAIL("expected UsageError");
    } catch (const UsageError &e) {
        CHECK_THAT(e.what(), ContainsSubstring("json, csv, svg"));
    }
}

TEST_CASE("layout parsers reject malformed input")
{
    CHECK_THROWS_AS(parse_layout_json("{\"n_cells\": 2}"), ValidationError);
    CHECK_THROWS_AS(parse_layout_json("not json"), ValidationError);
    CHECK_THROWS_AS(parse_layout_csv("i,j,g_mm,w_mm,slot_angle_deg\n0,0,1,2,0\n0,1,1,2,0\n1,0,1,2,0\n", 3.0),
                    ValidationError);
}
