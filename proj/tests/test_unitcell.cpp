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
#include "jha/error.hpp"
#include "jha/unitcell.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace jha;
using namespace jha::unitcell;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Rows whose transverse wavenumber is ratio * k0, phase all along x.
DispersionTable table_from_ratios(const std::vector<std::pair<double, double>> &gap_ratio, double f_ghz = 12.0,
                                  double p_mm = 3.0)
{
    std::vector<DispersionRow> rows;
    const double k0 = wavenumber(f_ghz);
    for (auto [g, r] : gap_ratio)
        rows.push_back({g, f_ghz, r * k0 * p_mm * 1e-3, 0.0});
    return DispersionTable(p_mm, rows);
}

} // namespace

TEST_CASE("phases_to_wavevector divides by the period")
{
    auto k = phases_to_wavevector(pi, 0.0, 0.003);
    CHECK_THAT(k.kx, WithinAbs(1047.1976, 1e-4));
    CHECK(k.ky == 0.0);
    k = phases_to_wavevector(0.0, 0.0, 0.003);
    CHECK(k.kx == 0.0);
    CHECK(k.ky == 0.0);
    k = phases_to_wavevector(pi / 2, pi / 2, 0.003);
    CHECK_THAT(k.kx, WithinAbs(523.5988, 1e-4));
    CHECK_THAT(k.ky, WithinAbs(523.5988, 1e-4));
    CHECK_THROWS_AS(phases_to_wavevector(1.0, 1.0, 0.0), InvalidGeometryError);
    CHECK_THROWS_AS(phases_to_wavevector(1.0, 1.0, -1.0), InvalidGeometryError);
}

TEST_CASE("transverse_wavenumber")
{
    CHECK(transverse_wavenumber(3.0, 4.0) == 5.0);
    CHECK(transverse_wavenumber(0.0, 0.0) == 0.0);
    const double k0 = wavenumber(11.75);
    CHECK(transverse_wavenumber(k0, 0.0) == k0);
    CHECK(transverse_wavenumber(-3.0, -4.0) == 5.0);
}

TEST_CASE("effective_impedance analytic points")
{
    const double k0 = wavenumber(11.75);
    CHECK_THAT(effective_impedance(k0, k0), WithinAbs(0.0, 1e-9));
    CHECK_THAT(effective_impedance(std::sqrt(2.0) * k0, k0), WithinAbs(z0, 1e-9));
    CHECK_THAT(effective_impedance(1.1662 * k0, k0), WithinAbs(226.04, 0.01));
    CHECK_THROWS_AS(effective_impedance(0.99 * k0, k0), FastWaveError);
}

TEST_CASE("effective_impedance increases with k_t")
{
    const double k0 = wavenumber(12.0);
    double prev = -1.0;
    for (double r = 1.0; r < 3.0; r += 0.01) {
        const double x = effective_impedance(r * k0, k0);
        CHECK(x > prev);
        prev = x;
    }
}

TEST_CASE("build_zg_curve from two rows")
{
    const auto curve = build_zg_curve(table_from_ratios({{0.5, 1.3}, {1.0, 1.1}}), 12.0);
    REQUIRE(curve.knots().size() == 2);
    // Z0 sqrt(r^2 - 1): 312.94 and 172.64 ohm.
    CHECK_THAT(curve.knots()[0].x_eff_ohm, WithinAbs(z0 * std::sqrt(0.69), 1e-9));
    CHECK_THAT(curve.knots()[1].x_eff_ohm, WithinAbs(z0 * std::sqrt(0.21), 1e-9));
    CHECK_THAT(curve.knots()[0].x_eff_ohm, WithinAbs(312.94, 0.01));
    CHECK_THAT(curve.knots()[1].x_eff_ohm, WithinAbs(172.64, 0.01));
    CHECK(curve.knots()[0].gap_mm < curve.knots()[1].gap_mm);
}

TEST_CASE("build_zg_curve errors")
{
    SECTION("wrong frequency only")
    {
        CHECK_THROWS_AS(build_zg_curve(table_from_ratios({{0.5, 1.3}, {1.0, 1.1}}), 11.0), InsufficientDataError);
    }
    SECTION("single row")
    {
        CHECK_THROWS_AS(build_zg_curve(table_from_ratios({{0.5, 1.3}}), 12.0), InsufficientDataError);
    }
    SECTION("duplicate key")
    {
        CHECK_THROWS_AS(table_from_ratios({{0.5, 1.3}, {0.5, 1.2}}), InvalidTableError);
    }
    SECTION("gap outside the cell")
    {
        CHECK_THROWS_AS(table_from_ratios({{3.0, 1.3}, {1.0, 1.1}}), InvalidGeometryError);
        CHECK_THROWS_AS(table_from_ratios({{0.0, 1.3}, {1.0, 1.1}}), InvalidGeometryError);
    }
    SECTION("fast wave row")
    {
        CHECK_THROWS_AS(build_zg_curve(table_from_ratios({{0.5, 1.3}, {1.0, 0.9}}), 12.0), FastWaveError);
    }
}

TEST_CASE("non-monotone data is rejected with the violating knots, or forced")
{
    const auto table = table_from_ratios({{0.2, 1.5}, {0.4, 1.3}, {0.6, 1.35}, {0.8, 1.1}});
    try {
        (void)build_zg_curve(table, 12.0);
        FAIL("expected NonMonotoneError");
    } catch (const NonMonotoneError &e) {
        REQUIRE(e.violations().size() == 1);
        CHECK(e.violations()[0].gap_mm == 0.6);
    }
    const auto forced = build_zg_curve(table, 12.0, MonotoneMode::force);
    REQUIRE(forced.knots().size() == 3);
    CHECK(forced.knots()[1].gap_mm == Catch::Approx(0.5));
    for (std::size_t k = 1; k < forced.knots().size(); ++k)
        CHECK(forced.knots()[k].x_eff_ohm < forced.knots()[k - 1].x_eff_ohm);
}

TEST_CASE("isotonic_decreasing pools violators")
{
    const std::vector<ZgKnot> in{{1, 10}, {2, 8}, {3, 9}, {4, 9}, {5, 2}};
    const auto out = isotonic_decreasing(in);
    REQUIRE(out.size() == 3);
    CHECK(out[0] == ZgKnot{1, 10});
    CHECK_THAT(out[1].gap_mm, WithinAbs(3.0, 1e-12));
    CHECK_THAT(out[1].x_eff_ohm, WithinAbs(26.0 / 3.0, 1e-12));
    CHECK(out[2] == ZgKnot{5, 2});
    // Already decreasing input is unchanged.
    const std::vector<ZgKnot> ok{{1, 5}, {2, 4}, {3, 1}};
    CHECK(isotonic_decreasing(ok) == ok);
}

TEST_CASE("ZgCurve invariants")
{
    CHECK_THROWS_AS(ZgCurve({{1.0, 100.0}}), InsufficientDataError);
    CHECK_THROWS_AS(ZgCurve({{1.0, 100.0}, {2.0, 100.0}}), InvalidTableError);
    CHECK_THROWS_AS(ZgCurve({{1.0, 100.0}, {2.0, 120.0}}), InvalidTableError);
    CHECK_THROWS_AS(ZgCurve({{1.0, 10.0}, {2.0, -1.0}}), InvalidTableError);
    const ZgCurve unsorted({{2.0, 100.0}, {1.0, 200.0}});
    CHECK(unsorted.min_gap() == 1.0);
    CHECK(unsorted.max_reactance() == 200.0);
}

TEST_CASE("invert_zg knots, midpoints and range")
{
    const ZgCurve curve({{0.2, 400.0}, {0.5, 300.0}, {1.0, 250.0}, {2.0, 150.0}});
    for (const auto &k : curve.knots())
        CHECK(invert_zg(curve, k.x_eff_ohm) == k.gap_mm);
    CHECK_THAT(invert_zg(curve, 350.0), WithinAbs(0.35, 1e-15));
    CHECK_THAT(invert_zg(curve, 200.0), WithinAbs(1.5, 1e-15));
    try {
        (void)invert_zg(curve, 401.0);
        FAIL("expected OutOfRangeError");
    } catch (const OutOfRangeError &e) {
        CHECK(e.nearest() == 400.0);
    }
    try {
        (void)invert_zg(curve, 100.0);
        FAIL("expected OutOfRangeError");
    } catch (const OutOfRangeError &e) {
        CHECK(e.nearest() == 150.0);
    }
}

TEST_CASE("forward and inverse evaluation agree on random reactances")
{
    const ZgCurve curve({{0.2, 400.0}, {0.5, 300.0}, {1.0, 250.0}, {2.0, 150.0}});
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(150.0, 400.0);
    for (int n = 0; n < 1000; ++n) {
        const double x = u(rng);
        CHECK_THAT(curve.reactance_at(invert_zg(curve, x)), WithinRel(x, 1e-12));
    }
}

TEST_CASE("synthetic sweep: knot round trip and decreasing shape")
{
    const SyntheticCellModel model;
    const auto table = synthetic_dispersion_table(model, {11.5, 11.75, 12.0});
    for (double f : {11.5, 11.75, 12.0}) {
        const auto curve = build_zg_curve(table, f);
        REQUIRE(curve.knots().size() == static_cast<std::size_t>(model.n_gaps));
        for (std::size_t k = 0; k < curve.knots().size(); ++k) {
            const auto &knot = curve.knots()[k];
            CHECK(invert_zg(curve, knot.x_eff_ohm) == knot.gap_mm);
            CHECK_THAT(knot.x_eff_ohm,
                       WithinRel(model.scale_ohm * std::pow(knot.gap_mm, -model.exponent), 1e-9));
            if (k > 0)
                CHECK(knot.x_eff_ohm < curve.knots()[k - 1].x_eff_ohm);
        }
    }
}

TEST_CASE("dispersion CSV parsing")
{
    const std::string good = "# sweep\n"
                             "g_mm,freq_ghz,phi_x_rad,phi_y_rad\n"
                             "0.5,12,1.2,0\n"
                             "\n"
                             "1.0,12,1.0,0.1\n";
    const auto t = DispersionTable::from_csv(good, 3.0);
    REQUIRE(t.rows().size() == 2);
    CHECK(t.rows()[1].phi_y_rad == 0.1);
    CHECK(DispersionTable::from_csv(t.to_csv(), 3.0).rows().size() == 2);

    const std::string bad = "g_mm,freq_ghz,phi_x_rad,phi_y_rad\n0.5,12,1.2,0\n1.0,12,abc,0\n";
    try {
        (void)DispersionTable::from_csv(bad, 3.0);
        FAIL("expected ValidationError");
    } catch (const ValidationError &e) {
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("line 3"));
    }
    CHECK_THROWS_AS(DispersionTable::from_csv("g,f\n1,2\n", 3.0), ValidationError);
    CHECK_THROWS_AS(DispersionTable::from_csv("g_mm,freq_ghz,phi_x_rad,phi_y_rad\n0.5,12,1.2\n", 3.0),
                    ValidationError);
}

TEST_CASE("ZgCurve CSV round trip is exact")
{
    const ZgCurve curve({{0.1, 648.2901234567891}, {0.7, 270.1}, {1.9, 172.64000000000001}});
    const auto back = ZgCurve::from_csv(curve.to_csv());
    CHECK(back.knots() == curve.knots());
    CHECK(curve.to_csv().rfind("g_mm,x_eff_ohm\n", 0) == 0);
}
