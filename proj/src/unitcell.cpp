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

#include "jha/unitcell.hpp"

#include "jha/constants.hpp"
#include "jha/io.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

namespace jha::unitcell {

namespace {

constexpr std::string_view dispersion_header = "g_mm,freq_ghz,phi_x_rad,phi_y_rad";
constexpr std::string_view curve_header = "g_mm,x_eff_ohm";

bool same_frequency(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b)); }

} // namespace

DispersionTable::DispersionTable(double periodicity_mm, std::vector<DispersionRow> rows)
    : periodicity_mm_(periodicity_mm), rows_(std::move(rows))
{
    if (!(periodicity_mm_ > 0.0))
        throw InvalidGeometryError("periodicity must be positive, got " + io::format_double(periodicity_mm_) + " mm");
    std::set<std::pair<double, double>> keys;
    for (const auto &r : rows_) {
        if (!(r.gap_mm > 0.0 && r.gap_mm < periodicity_mm_))
            throw InvalidGeometryError("gap " + io::format_double(r.gap_mm) + " mm outside (0, " +
                                       io::format_double(periodicity_mm_) + ") mm");
        if (!(r.freq_ghz > 0.0))
            throw InvalidTableError("non-positive frequency " + io::format_double(r.freq_ghz) + " GHz");
        if (!keys.emplace(r.gap_mm, r.freq_ghz).second)
            throw InvalidTableError("duplicate row for gap " + io::format_double(r.gap_mm) + " mm at " +
                                    io::format_double(r.freq_ghz) + " GHz");
    }
}

DispersionTable DispersionTable::from_csv(std::string_view text, double periodicity_mm)
{
    io::CsvDocument doc{std::string(text), dispersion_header};
    std::vector<DispersionRow> rows;
    rows.reserve(doc.rows().size());
    for (const auto &row : doc.rows()) {
        rows.push_back({io::parse_double(row.fields[0], "g_mm", row.line_no),
                        io::parse_double(row.fields[1], "freq_ghz", row.line_no),
                        io::parse_double(row.fields[2], "phi_x_rad", row.line_no),
                        io::parse_double(row.fields[3], "phi_y_rad", row.line_no)});
    }
    return DispersionTable(periodicity_mm, std::move(rows));
}

std::string DispersionTable::to_csv() const
{
    std::string out(dispersion_header);
    out += '\n';
    for (const auto &r : rows_) {
        out += io::format_double(r.gap_mm) + ',' + io::format_double(r.freq_ghz) + ',' +
               io::format_double(r.phi_x_rad) + ',' + io::format_double(r.phi_y_rad) + '\n';
    }
    return out;
}

ZgCurve::ZgCurve(std::vector<ZgKnot> knots) : knots_(std::move(knots))
{
    if (knots_.size() < 2)
        throw InsufficientDataError("a Z(g) curve needs at least 2 knots, got " + std::to_string(knots_.size()));
    std::sort(knots_.begin(), knots_.end(), [](const ZgKnot &a, const ZgKnot &b) { return a.gap_mm < b.gap_mm; });
    for (std::size_t i = 0; i < knots_.size(); ++i) {
        if (!(knots_[i].x_eff_ohm >= 0.0) || !std::isfinite(knots_[i].x_eff_ohm))
            throw InvalidTableError("negative or non-finite reactance at gap " + io::format_double(knots_[i].gap_mm));
        if (i > 0 && knots_[i].gap_mm == knots_[i - 1].gap_mm)
            throw InvalidTableError("duplicate gap " + io::format_double(knots_[i].gap_mm) + " mm");
        if (i > 0 && !(knots_[i].x_eff_ohm < knots_[i - 1].x_eff_ohm))
            throw InvalidTableError("curve not strictly decreasing at gap " + io::format_double(knots_[i].gap_mm) +
                                    " mm");
    }
}

ZgCurve ZgCurve::from_csv(std::string_view text)
{
    io::CsvDocument doc{std::string(text), curve_header};
    std::vector<ZgKnot> knots;
    for (const auto &row : doc.rows())
        knots.push_back({io::parse_double(row.fields[0], "g_mm", row.line_no),
                         io::parse_double(row.fields[1], "x_eff_ohm", row.line_no)});
    return ZgCurve(std::move(knots));
}

std::string ZgCurve::to_csv() const
{
    std::string out(curve_header);
    out += '\n';
    for (const auto &k : knots_)
        out += io::format_double(k.gap_mm) + ',' + io::format_double(k.x_eff_ohm) + '\n';
    return out;
}

double ZgCurve::reactance_at(double gap_mm) const
{
    if (gap_mm < min_gap() || gap_mm > max_gap())
        throw OutOfRangeError("gap " + io::format_double(gap_mm) + " mm outside curve span",
                              std::clamp(gap_mm, min_gap(), max_gap()));
    auto hi = std::lower_bound(knots_.begin(), knots_.end(), gap_mm,
                               [](const ZgKnot &k, double g) { return k.gap_mm < g; });
    if (hi->gap_mm == gap_mm)
        return hi->x_eff_ohm;
    const auto lo = hi - 1;
    const double t = (gap_mm - lo->gap_mm) / (hi->gap_mm - lo->gap_mm);
    return lo->x_eff_ohm + t * (hi->x_eff_ohm - lo->x_eff_ohm);
}

WaveVector phases_to_wavevector(double phi_x_rad, double phi_y_rad, double periodicity_m)
{
    if (!(periodicity_m > 0.0))
        throw InvalidGeometryError("periodicity must be positive, got " + io::format_double(periodicity_m) + " m");
    return {phi_x_rad / periodicity_m, phi_y_rad / periodicity_m};
}

double transverse_wavenumber(double kx, double ky) { return std::hypot(kx, ky); }

double effective_impedance(double kt, double k0)
{
    if (!(k0 > 0.0))
        throw InvalidGeometryError("free-space wavenumber must be positive");
    if (kt < k0)
        throw FastWaveError("k_t = " + io::format_double(kt) + " rad/m is below k_0 = " + io::format_double(k0) +
                            " rad/m: not a bound surface wave");
    // (kt - k0)(kt + k0) keeps precision near the onset of binding.
    return z0 * std::sqrt((kt - k0) * (kt + k0)) / k0;
}

std::vector<ZgKnot> isotonic_decreasing(const std::vector<ZgKnot> &sorted_knots)
{
    struct Block {
        double gap_sum;
        double x_sum;
        int count;
        double mean() const { return x_sum / count; }
    };
    std::vector<Block> blocks;
    for (const auto &k : sorted_knots) {
        blocks.push_back({k.gap_mm, k.x_eff_ohm, 1});
        while (blocks.size() > 1 && blocks[blocks.size() - 2].mean() <= blocks.back().mean()) {
            auto last = blocks.back();
            blocks.pop_back();
            blocks.back().gap_sum += last.gap_sum;
            blocks.back().x_sum += last.x_sum;
            blocks.back().count += last.count;
        }
    }
    std::vector<ZgKnot> out;
    out.reserve(blocks.size());
    for (const auto &b : blocks)
        out.push_back({b.gap_sum / b.count, b.mean()});
    return out;
}

ZgCurve build_zg_curve(const DispersionTable &table, double freq_ghz, MonotoneMode mode)
{
    const double k0 = wavenumber(freq_ghz);
    const double p_m = table.periodicity_mm() * 1e-3;
    std::vector<ZgKnot> knots;
    for (const auto &row : table.rows()) {
        if (!same_frequency(row.freq_ghz, freq_ghz))
            continue;
        const auto k = phases_to_wavevector(row.phi_x_rad, row.phi_y_rad, p_m);
        knots.push_back({row.gap_mm, effective_impedance(transverse_wavenumber(k.kx, k.ky), k0)});
    }
    if (knots.size() < 2)
        throw InsufficientDataError("need at least 2 rows at " + io::format_double(freq_ghz) + " GHz, found " +
                                    std::to_string(knots.size()));
    std::sort(knots.begin(), knots.end(), [](const ZgKnot &a, const ZgKnot &b) { return a.gap_mm < b.gap_mm; });

    std::vector<ZgKnot> violations;
    for (std::size_t i = 1; i < knots.size(); ++i)
        if (!(knots[i].x_eff_ohm < knots[i - 1].x_eff_ohm))
            violations.push_back(knots[i]);
    if (violations.empty())
        return ZgCurve(std::move(knots));
    if (mode == MonotoneMode::reject) {
        std::string msg = "extracted Z(g) is not strictly decreasing at gap(s):";
        for (const auto &v : violations)
            msg += ' ' + io::format_double(v.gap_mm);
        msg += " mm (use --force-monotone to apply isotonic regression)";
        throw NonMonotoneError(msg, std::move(violations));
    }
    return ZgCurve(isotonic_decreasing(knots));
}

double invert_zg(const ZgCurve &curve, double x_eff_ohm)
{
    const auto &k = curve.knots();
    if (x_eff_ohm > curve.max_reactance() || x_eff_ohm < curve.min_reactance() || !std::isfinite(x_eff_ohm)) {
        const double nearest = std::clamp(x_eff_ohm, curve.min_reactance(), curve.max_reactance());
        throw OutOfRangeError("reactance " + io::format_double(x_eff_ohm) + " ohm outside curve range [" +
                                  io::format_double(curve.min_reactance()) + ", " +
                                  io::format_double(curve.max_reactance()) + "] ohm",
                              nearest);
    }
    // Knots run in decreasing reactance; find the first knot with x <= target.
    auto hi = std::partition_point(k.begin(), k.end(), [&](const ZgKnot &kn) { return kn.x_eff_ohm > x_eff_ohm; });
    if (hi->x_eff_ohm == x_eff_ohm)
        return hi->gap_mm;
    const auto lo = hi - 1;
    const double t = (x_eff_ohm - lo->x_eff_ohm) / (hi->x_eff_ohm - lo->x_eff_ohm);
    return lo->gap_mm + t * (hi->gap_mm - lo->gap_mm);
}

DispersionTable synthetic_dispersion_table(const SyntheticCellModel &model, const std::vector<double> &freqs_ghz)
{
    if (model.n_gaps < 2 || !(model.gap_min_mm > 0.0) || !(model.gap_max_mm > model.gap_min_mm))
        throw InvalidGeometryError("synthetic model needs n_gaps >= 2 and 0 < gap_min < gap_max");
    const double p_m = model.periodicity_mm * 1e-3;
    std::vector<DispersionRow> rows;
    for (double f : freqs_ghz) {
        const double k0 = wavenumber(f);
        for (int n = 0; n < model.n_gaps; ++n) {
            const double g = model.gap_min_mm + (model.gap_max_mm - model.gap_min_mm) * n / (model.n_gaps - 1);
            const double x = model.scale_ohm * std::pow(g, -model.exponent);
            const double kt = k0 * std::sqrt(1.0 + (x / z0) * (x / z0));
            rows.push_back({g, f, kt * p_m, 0.0});
        }
    }
    return DispersionTable(model.periodicity_mm, std::move(rows));
}

} // namespace jha::unitcell
