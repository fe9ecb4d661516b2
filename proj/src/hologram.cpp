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

#include "jha/hologram.hpp"

#include "jha/constants.hpp"
#include "jha/error.hpp"
#include "jha/io.hpp"

#include <algorithm>
#include <cmath>

namespace jha::hologram {

namespace {

constexpr cplx j1{0.0, 1.0};
constexpr std::string_view field_header = "i,j,x_mm,y_mm,zxx_ohm,zxy_ohm,zyy_ohm,xeffmax_ohm,angle_deg,region";

/// Sign pair of the recorded polarisation E_t = (s1 j, s2).
struct FormSigns {
    double s1;
    double s2;
};

FormSigns signs_for(Handedness h, HologramForm form)
{
    const double s2 = h == Handedness::lhcp ? 1.0 : -1.0;
    const double s1 = form == HologramForm::copolar ? -1.0 : 1.0;
    return {s1, s2};
}

void check_feed(double r, double exclusion_radius_m)
{
    if (r == 0.0 || r < exclusion_radius_m)
        throw FeedRegionError("point at r = " + io::format_double(r) + " m lies in the feed region (r < " +
                              io::format_double(exclusion_radius_m) + " m)");
}

} // namespace

double surface_index(double x_avg_ohm)
{
    const double t = x_avg_ohm / z0;
    return std::sqrt(1.0 + t * t);
}

CVec2 surface_current(double x_m, double y_m, double k_sw, double exclusion_radius_m)
{
    const double r = std::hypot(x_m, y_m);
    check_feed(r, exclusion_radius_m);
    const cplx phase = std::polar(1.0, -k_sw * r);
    return {x_m / r * phase, y_m / r * phase};
}

CVec3 desired_erad(double x_m, Handedness h, double theta_l_rad, double k0)
{
    const double s = std::sin(theta_l_rad);
    const cplx phase = std::polar(1.0, -k0 * x_m * s);
    const double ey = h == Handedness::lhcp ? 1.0 : -1.0;
    return {-j1 * phase, ey * phase, -j1 * s * phase};
}

Tensor2 tensor_from_interference(const CVec3 &e_rad, const CVec2 &j_surf, double x_avg_ohm, double m_ohm)
{
    const double jn = std::norm(j_surf.x) + std::norm(j_surf.y);
    if (std::abs(jn - 1.0) > 1e-9)
        throw ValidationError("reference current must have unit magnitude, |J|^2 = " + io::format_double(jn));
    const std::array<cplx, 2> e{e_rad.x, e_rad.y};
    const std::array<cplx, 2> jv{j_surf.x, j_surf.y};
    auto w = [&](int a, int b) { return (e[a] * std::conj(jv[b]) - jv[a] * std::conj(e[b])).imag(); };
    const double half_m = 0.5 * m_ohm;
    // Im(W) is symmetric because W is anti-Hermitian; average the two off-diagonal
    // evaluations so the stored tensor is symmetric to the last bit.
    return {x_avg_ohm + half_m * w(0, 0), half_m * 0.5 * (w(0, 1) + w(1, 0)), x_avg_ohm + half_m * w(1, 1)};
}

double holographic_phase(double x_m, double y_m, double freq_ghz, double theta_l_rad, double n_sw)
{
    const double k0 = wavenumber(freq_ghz);
    return k0 * x_m * std::sin(theta_l_rad) - n_sw * k0 * std::hypot(x_m, y_m);
}

Tensor2 tensor_cp(double x_m, double y_m, const BandEdge &band, double theta_l_rad, Handedness h,
                  double exclusion_radius_m)
{
    const double r = std::hypot(x_m, y_m);
    check_feed(r, exclusion_radius_m);
    const double c = x_m / r;
    const double s = y_m / r;
    const double gamma = holographic_phase(x_m, y_m, band.freq_ghz, theta_l_rad, surface_index(band.x_avg_ohm));
    const double cg = std::cos(gamma);
    const double sg = std::sin(gamma);
    const double X = band.x_avg_ohm;
    const double M = band.modulation_ohm;
    if (h == Handedness::rhcp)
        return {X - M * c * cg, 0.5 * M * (-s * cg + c * sg), X + M * s * sg};
    return {X - M * c * cg, -0.5 * M * (s * cg + c * sg), X - M * s * sg};
}

Tensor2 tensor_wideband(double x_m, double y_m, const DesignSpec &spec, double theta_l_rad, Handedness h,
                        HologramForm form)
{
    const double r = std::hypot(x_m, y_m);
    check_feed(r, spec.feed_exclusion_radius_mm * 1e-3);
    const double c = x_m / r;
    const double s = y_m / r;
    const auto lo = spec.lower();
    const auto hi = spec.upper();
    const double g1 = holographic_phase(x_m, y_m, lo.freq_ghz, theta_l_rad, surface_index(lo.x_avg_ohm));
    const double g2 = holographic_phase(x_m, y_m, hi.freq_ghz, theta_l_rad, surface_index(hi.x_avg_ohm));
    const double dc = lo.modulation_ohm * std::cos(g1) + hi.modulation_ohm * std::cos(g2);
    const double ds = lo.modulation_ohm * std::sin(g1) + hi.modulation_ohm * std::sin(g2);
    const double xs = lo.x_avg_ohm + hi.x_avg_ohm;
    const auto [s1, s2] = signs_for(h, form);
    return {0.5 * (xs + s1 * c * dc), 0.25 * (s1 * s * dc - s2 * c * ds), 0.5 * (xs - s2 * s * ds)};
}

std::string_view to_string(Region r)
{
    switch (r) {
    case Region::cp_half:
        return "cp_half";
    case Region::lp_half:
        return "lp_half";
    case Region::feed_excluded:
        return "feed_excluded";
    }
    return "cp_half";
}

Region parse_region(std::string_view s)
{
    if (s == "cp_half")
        return Region::cp_half;
    if (s == "lp_half")
        return Region::lp_half;
    if (s == "feed_excluded")
        return Region::feed_excluded;
    throw ValidationError("unknown region tag '" + std::string(s) + "'");
}

JanusAssignment janus_assignment(int i, int j, double y_m, const DesignSpec &spec)
{
    if (y_m >= 0.0)
        return {Region::cp_half, HologramForm::copolar, deg_to_rad(spec.theta_cp_deg)};
    const bool odd = ((i + j) % 2) != 0;
    return {Region::lp_half, odd ? HologramForm::partner : HologramForm::copolar, -deg_to_rad(spec.theta_lp_deg)};
}

Tensor2 tensor_janus(int i, int j, double x_m, double y_m, const DesignSpec &spec)
{
    const auto a = janus_assignment(i, j, y_m, spec);
    return tensor_wideband(x_m, y_m, spec, a.theta_l_rad, spec.handedness, a.form);
}

DispersionRoots dispersion_roots(const Tensor2 &z, double theta_k_rad)
{
    const cplx zxx = j1 * z.xx;
    const cplx zxy = j1 * z.xy;
    const cplx zyy = j1 * z.yy;
    const double c2 = std::cos(theta_k_rad) * std::cos(theta_k_rad);
    const double s2 = std::sin(theta_k_rad) * std::sin(theta_k_rad);
    const double sin2 = std::sin(2.0 * theta_k_rad);
    const cplx across = zyy * c2 - zxy * sin2 + zxx * s2;
    const cplx along = zxx * c2 + zxy * sin2 + zyy * s2;
    const cplx a = z0 * z0 - zxy * zxy + zxx * zyy;
    const cplx denom = 2.0 * z0 * across;
    if (std::abs(denom) <= 1e-12 * z0 * z0)
        throw DegenerateDirectionError("dispersion relation denominator vanishes at theta_k = " +
                                       io::format_double(rad_to_deg(theta_k_rad)) + " deg");
    const cplx root = std::sqrt(a * a - 4.0 * z0 * z0 * across * along);
    DispersionRoots out;
    out.roots = {(-j1 * a + root) / denom, (-j1 * a - root) / denom};

    // Physical root: positive finite implied reactance; ties go to the smaller |k_z/k|.
    for (int k = 0; k < 2; ++k) {
        const double x = implied_reactance(out.roots[k]);
        if (!(x > 0.0) || !std::isfinite(x))
            continue;
        if (!out.physical || std::abs(out.roots[k]) < std::abs(out.roots[*out.physical]))
            out.physical = k;
    }
    return out;
}

double implied_reactance(cplx kz_over_k) { return (z0 * kz_over_k).imag(); }

PrincipalDirection max_impedance_direction(const Tensor2 &z)
{
    const double half_diff = 0.5 * (z.xx - z.yy);
    const double radius = std::hypot(half_diff, z.xy);
    const double scale = std::max({std::abs(z.xx), std::abs(z.yy), std::abs(z.xy), 1.0});
    PrincipalDirection d;
    d.x_eff_max_ohm = 0.5 * (z.xx + z.yy) + radius;
    if (radius <= 1e-12 * scale) {
        d.degenerate = true;
        return d;
    }
    double angle = 0.5 * std::atan2(z.xy, half_diff);
    if (angle < 0.0)
        angle += pi;
    if (angle >= pi)
        angle -= pi;
    d.angle_rad = angle;
    return d;
}

TensorImpedanceField::TensorImpedanceField(int n_cells, double pitch_m, std::vector<CellImpedance> cells)
    : n_(n_cells), pitch_m_(pitch_m), cells_(std::move(cells))
{
    if (n_ <= 0 || !(pitch_m_ > 0.0))
        throw ValidationError("field needs a positive cell count and pitch");
    if (cells_.size() != static_cast<std::size_t>(n_) * n_)
        throw ValidationError("field has " + std::to_string(cells_.size()) + " cells, expected " +
                              std::to_string(static_cast<long>(n_) * n_));
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        const auto &c = cells_[k];
        if (static_cast<std::size_t>(c.i) * n_ + c.j != k || c.i < 0 || c.j < 0 || c.i >= n_ || c.j >= n_)
            throw ValidationError("field cells out of order at (" + std::to_string(c.i) + ", " + std::to_string(c.j) +
                                  ")");
    }
}

std::string TensorImpedanceField::to_csv() const
{
    std::string out(field_header);
    out += '\n';
    for (const auto &c : cells_) {
        // Coordinates at 1 nm resolution so that reading and rewriting is a fixed point.
        out += std::to_string(c.i) + ',' + std::to_string(c.j) + ',' + io::format_fixed(c.x_m * 1e3, 6) + ',' +
               io::format_fixed(c.y_m * 1e3, 6) + ',' + io::format_double(c.z.xx) + ',' + io::format_double(c.z.xy) +
               ',' + io::format_double(c.z.yy) + ',' + io::format_double(c.x_eff_max_ohm) + ',' +
               io::format_double(rad_to_deg(c.direction_rad)) + ',' + std::string(to_string(c.region)) + '\n';
    }
    return out;
}

TensorImpedanceField TensorImpedanceField::from_csv(std::string_view text)
{
    io::CsvDocument doc{std::string(text), field_header};
    std::vector<CellImpedance> cells;
    cells.reserve(doc.rows().size());
    for (const auto &row : doc.rows()) {
        const auto &f = row.fields;
        CellImpedance c;
        c.i = static_cast<int>(io::parse_long(f[0], "i", row.line_no));
        c.j = static_cast<int>(io::parse_long(f[1], "j", row.line_no));
        c.x_m = io::parse_double(f[2], "x_mm", row.line_no) * 1e-3;
        c.y_m = io::parse_double(f[3], "y_mm", row.line_no) * 1e-3;
        c.z = {io::parse_double(f[4], "zxx_ohm", row.line_no), io::parse_double(f[5], "zxy_ohm", row.line_no),
               io::parse_double(f[6], "zyy_ohm", row.line_no)};
        // Direction columns are derived data; recompute them from the exact tensor.
        (void)io::parse_double(f[7], "xeffmax_ohm", row.line_no);
        (void)io::parse_double(f[8], "angle_deg", row.line_no);
        try {
            c.region = parse_region(f[9]);
        } catch (const ValidationError &e) {
            throw ValidationError("line " + std::to_string(row.line_no) + ": " + e.what());
        }
        const auto d = max_impedance_direction(c.z);
        c.x_eff_max_ohm = d.x_eff_max_ohm;
        c.direction_rad = d.angle_rad;
        c.degenerate = d.degenerate;
        cells.push_back(c);
    }
    const auto count = cells.size();
    const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(count))));
    if (n < 1 || static_cast<std::size_t>(n) * n != count)
        throw ValidationError("field CSV has " + std::to_string(count) + " cells, not a square grid");
    std::sort(cells.begin(), cells.end(),
              [](const CellImpedance &a, const CellImpedance &b) { return a.i != b.i ? a.i < b.i : a.j < b.j; });
    double pitch = 0.0;
    if (n > 1)
        pitch = cells[static_cast<std::size_t>(n)].x_m - cells[0].x_m;
    else
        throw ValidationError("field CSV needs at least a 2x2 grid to infer the lattice pitch");
    return TensorImpedanceField(n, pitch, std::move(cells));
}

double cell_center_m(int k, int n_cells, double pitch_m) { return (k - 0.5 * (n_cells - 1)) * pitch_m; }

TensorImpedanceField synthesize_with(const DesignSpec &spec, double unmodulated_ohm, const CellRule &rule)
{
    spec.validate();
    const int n = spec.n_cells;
    const double p = spec.lattice_p_mm * 1e-3;
    const double excl = spec.feed_exclusion_radius_mm * 1e-3;
    std::vector<CellImpedance> cells(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            auto &c = cells[static_cast<std::size_t>(i) * n + j];
            c.i = i;
            c.j = j;
            c.x_m = cell_center_m(i, n, p);
            c.y_m = cell_center_m(j, n, p);
            const double r = std::hypot(c.x_m, c.y_m);
            if (r == 0.0 || r < excl) {
                c.region = Region::feed_excluded;
                c.z = Tensor2::isotropic(unmodulated_ohm);
            } else {
                c.region = c.y_m >= 0.0 ? Region::cp_half : Region::lp_half;
                c.z = rule(i, j, c.x_m, c.y_m);
            }
            const auto d = max_impedance_direction(c.z);
            c.x_eff_max_ohm = d.x_eff_max_ohm;
            c.direction_rad = d.angle_rad;
            c.degenerate = d.degenerate;
        }
    }
    return TensorImpedanceField(n, p, std::move(cells));
}

TensorImpedanceField synthesize_field(const DesignSpec &spec)
{
    const double mean_x = 0.5 * (spec.x1_ohm + spec.x2_ohm);
    return synthesize_with(spec, mean_x, [&spec](int i, int j, double x, double y) {
        return tensor_janus(i, j, x, y, spec);
    });
}

TensorImpedanceField synthesize_single_beam(const DesignSpec &spec, const BandEdge &band, double theta_l_rad,
                                            Handedness h)
{
    return synthesize_with(spec, band.x_avg_ohm, [&](int, int, double x, double y) {
        return tensor_cp(x, y, band, theta_l_rad, h);
    });
}

TensorImpedanceField synthesize_interference(const DesignSpec &spec, const BandEdge &band, double theta_l_rad,
                                             const CVec3 &polarization)
{
    const double k0 = wavenumber(band.freq_ghz);
    const double k_sw = surface_index(band.x_avg_ohm) * k0;
    const double sin_t = std::sin(theta_l_rad);
    return synthesize_with(spec, band.x_avg_ohm, [&](int, int, double x, double y) {
        const cplx phase = std::polar(1.0, -k0 * x * sin_t);
        const CVec3 e{polarization.x * phase, polarization.y * phase, polarization.z * phase};
        return tensor_from_interference(e, surface_current(x, y, k_sw), band.x_avg_ohm, band.modulation_ohm);
    });
}

} // namespace jha::hologram
