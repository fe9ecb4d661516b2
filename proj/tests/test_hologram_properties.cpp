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

// Randomised identities for the synthesis closed forms. Seeds are fixed.

#include "jha/constants.hpp"
#include "jha/design_spec.hpp"
#include "jha/error.hpp"
#include "jha/hologram.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace jha;
using namespace jha::hologram;

namespace {

constexpr cplx jj{0.0, 1.0};

// Wideband aperture blocks written out term by term from the printed matrices.
Tensor2 printed_cp_block(double x, double y, const DesignSpec &s, double theta)
{
    const double r = std::hypot(x, y);
    const double g1 = holographic_phase(x, y, s.f_lower_ghz, theta, surface_index(s.x1_ohm));
    const double g2 = holographic_phase(x, y, s.f_upper_ghz, theta, surface_index(s.x2_ohm));
    const double Dc = s.m1_ohm * std::cos(g1) + s.m2_ohm * std::cos(g2);
    const double Ds = s.m1_ohm * std::sin(g1) + s.m2_ohm * std::sin(g2);
    const double X1 = s.x1_ohm, X2 = s.x2_ohm;
    return {0.5 * (X1 + X2 - x * Dc / r), -0.25 * ((y * Dc + x * Ds) / r), 0.5 * (X1 + X2 - y * Ds / r)};
}

Tensor2 printed_partner_block(double x, double y, const DesignSpec &s, double theta)
{
    const double r = std::hypot(x, y);
    const double g1 = holographic_phase(x, y, s.f_lower_ghz, theta, surface_index(s.x1_ohm));
    const double g2 = holographic_phase(x, y, s.f_upper_ghz, theta, surface_index(s.x2_ohm));
    const double Dc = s.m1_ohm * std::cos(g1) + s.m2_ohm * std::cos(g2);
    const double Ds = s.m1_ohm * std::sin(g1) + s.m2_ohm * std::sin(g2);
    const double X1 = s.x1_ohm, X2 = s.x2_ohm;
    return {0.5 * (X1 + X2 + x * Dc / r), 0.25 * ((y * Dc - x * Ds) / r), 0.5 * (X1 + X2 - y * Ds / r)};
}

// Verbatim: k_z/k = [-j A +- sqrt(A^2 - 4 Z0^2 D N)] / (2 Z0 D), with the entries used as
// j * reactance.
std::array<cplx, 2> printed_roots(const Tensor2 &t, double th)
{
    const cplx Zxx = jj * t.xx, Zxy = jj * t.xy, Zyy = jj * t.yy;
    const double c = std::cos(th), s = std::sin(th);
    const cplx D = Zyy * c * c - Zxy * std::sin(2 * th) + Zxx * s * s;
    const cplx N = Zxx * c * c + Zxy * std::sin(2 * th) + Zyy * s * s;
    const cplx A = z0 * z0 - Zxy * Zxy + Zxx * Zyy;
    const cplx root = std::sqrt(A * A - 4.0 * z0 * z0 * D * N);
    return {(-jj * A + root) / (2.0 * z0 * D), (-jj * A - root) / (2.0 * z0 * D)};
}

double max_abs_diff(const Tensor2 &a, const Tensor2 &b)
{
    return std::max({std::abs(a.xx - b.xx), std::abs(a.xy - b.xy), std::abs(a.yy - b.yy)});
}

} // namespace

TEST_CASE("closed-form CP tensor equals the interference tensor at random points")
{
    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> pos(-0.105, 0.105);
    std::uniform_real_distribution<double> ang(-deg_to_rad(80.0), deg_to_rad(80.0));
    std::uniform_real_distribution<double> freq(8.0, 16.0);
    std::uniform_real_distribution<double> react(50.0, 500.0);
    std::uniform_real_distribution<double> mod(10.0, 300.0);
    double worst = 0.0;
    int n = 0;
    while (n < 10000) {
        const double x = pos(rng), y = pos(rng);
        if (std::hypot(x, y) < 1e-4)
            continue;
        const BandEdge band{freq(rng), react(rng), mod(rng)};
        const double th = ang(rng);
        const double k0 = wavenumber(band.freq_ghz);
        const auto J = surface_current(x, y, surface_index(band.x_avg_ohm) * k0);
        for (auto h : {Handedness::lhcp, Handedness::rhcp}) {
            const auto ref = tensor_from_interference(desired_erad(x, h, th, k0), J, band.x_avg_ohm,
                                                      band.modulation_ohm);
            const auto cf = tensor_cp(x, y, band, th, h);
            worst = std::max(worst, max_abs_diff(ref, cf) / band.modulation_ohm);
        }
        ++n;
    }
    INFO("worst |difference| / M = " << worst);
    CHECK(worst < 1e-9);
}

TEST_CASE("the opposite phase sign breaks the equivalence")
{
    // Guards the sign of the guided-wave term: flipping it must be detectable.
    const BandEdge band{11.75, 225.0, 171.0};
    const double th = deg_to_rad(30.0);
    const double x = 0.037, y = 0.052;
    const double k0 = wavenumber(band.freq_ghz);
    const double nsw = surface_index(band.x_avg_ohm);
    const double r = std::hypot(x, y);
    const double gamma_flipped = nsw * k0 * r - k0 * x * std::sin(th);
    const double c = x / r, s = y / r;
    const Tensor2 lhcp_flipped{band.x_avg_ohm - band.modulation_ohm * c * std::cos(gamma_flipped),
                               -0.5 * band.modulation_ohm * (s * std::cos(gamma_flipped) + c * std::sin(gamma_flipped)),
                               band.x_avg_ohm - band.modulation_ohm * s * std::sin(gamma_flipped)};
    const auto ref = tensor_from_interference(desired_erad(x, Handedness::lhcp, th, k0),
                                              surface_current(x, y, nsw * k0), band.x_avg_ohm, band.modulation_ohm);
    CHECK(max_abs_diff(ref, lhcp_flipped) > 1.0);
}

TEST_CASE("wideband tensor is the mean of the band-edge tensors and the printed blocks")
{
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> pos(-0.105, 0.105);
    std::uniform_real_distribution<double> ang(-1.2, 1.2);
    for (const auto &spec : {DesignSpec::design_i(), DesignSpec::design_ii(), DesignSpec::design_iii()}) {
        for (int n = 0; n < 3000; ++n) {
            const double x = pos(rng), y = pos(rng);
            if (std::hypot(x, y) < spec.feed_exclusion_radius_mm * 1e-3)
                continue;
            const double th = ang(rng);
            const auto w = tensor_wideband(x, y, spec, th, Handedness::lhcp);
            const auto mean = 0.5 * (tensor_cp(x, y, spec.lower(), th, Handedness::lhcp) +
                                     tensor_cp(x, y, spec.upper(), th, Handedness::lhcp));
            const double scale = spec.x1_ohm + spec.x2_ohm + spec.m1_ohm + spec.m2_ohm;
            CHECK(max_abs_diff(w, mean) <= 4e-16 * scale * 4);
            CHECK(max_abs_diff(w, printed_cp_block(x, y, spec, th)) <= 4e-16 * scale * 4);
            const auto p = tensor_wideband(x, y, spec, th, Handedness::lhcp, HologramForm::partner);
            CHECK(max_abs_diff(p, printed_partner_block(x, y, spec, th)) <= 4e-16 * scale * 4);
            // RHCP wideband is also the mean of its band-edge tensors.
            const auto wr = tensor_wideband(x, y, spec, th, Handedness::rhcp);
            const auto mr = 0.5 * (tensor_cp(x, y, spec.lower(), th, Handedness::rhcp) +
                                   tensor_cp(x, y, spec.upper(), th, Handedness::rhcp));
            CHECK(max_abs_diff(wr, mr) <= 4e-16 * scale * 4);
        }
    }
}

TEST_CASE("Janus cells use the printed blocks on each half")
{
    const auto spec = DesignSpec::design_iii();
    const auto field = synthesize_field(spec);
    const double th_cp = deg_to_rad(spec.theta_cp_deg);
    const double th_lp = -deg_to_rad(spec.theta_lp_deg);
    for (const auto &c : field.cells()) {
        if (c.region == Region::feed_excluded)
            continue;
        Tensor2 expect;
        if (c.y_m >= 0.0)
            expect = printed_cp_block(c.x_m, c.y_m, spec, th_cp);
        else if ((c.i % 2 == 0 && c.j % 2 == 1) || (c.i % 2 == 1 && c.j % 2 == 0))
            expect = printed_partner_block(c.x_m, c.y_m, spec, th_lp);
        else
            expect = printed_cp_block(c.x_m, c.y_m, spec, th_lp);
        REQUIRE(max_abs_diff(c.z, expect) < 1e-12);
    }
}

TEST_CASE("checkerboard covers half of every LP-half row")
{
    const auto spec = DesignSpec::design_i();
    const int n = spec.n_cells;
    const double p = spec.lattice_p_mm * 1e-3;
    int total_partner = 0, total = 0;
    for (int j = 0; j < n; ++j) {
        const double y = cell_center_m(j, n, p);
        if (y >= 0.0)
            continue;
        int partner = 0, copolar = 0;
        for (int i = 0; i < n; ++i) {
            const auto a = janus_assignment(i, j, y, spec);
            CHECK(a.region == Region::lp_half);
            (a.form == HologramForm::partner ? partner : copolar)++;
        }
        CHECK(std::abs(partner - copolar) <= 1);
        total_partner += partner;
        total += n;
    }
    CHECK(2 * total_partner == total);
}

TEST_CASE("every synthesised tensor is symmetric and within the modulation bounds")
{
    for (const auto &spec : {DesignSpec::design_i(), DesignSpec::design_ii(), DesignSpec::design_iii()}) {
        const auto field = synthesize_field(spec);
        const double xbar = 0.5 * (spec.x1_ohm + spec.x2_ohm);
        const double mbar = 0.5 * (spec.m1_ohm + spec.m2_ohm);
        for (const auto &c : field.cells()) {
            CHECK(c.z.yx() == c.z.xy);
            CHECK(std::abs(c.z.xx - xbar) <= mbar + 1e-9);
            CHECK(std::abs(c.z.yy - xbar) <= mbar + 1e-9);
            CHECK(std::abs(c.z.xy) <= 0.5 * mbar * std::sqrt(2.0) + 1e-9);
        }
    }
}

TEST_CASE("dispersion roots match the printed relation and satisfy it")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> diag(50.0, 500.0);
    std::uniform_real_distribution<double> off(-150.0, 150.0);
    std::uniform_real_distribution<double> ang(0.0, pi);
    for (int n = 0; n < 2000; ++n) {
        const Tensor2 t{diag(rng), off(rng), diag(rng)};
        const double th = ang(rng);
        DispersionRoots roots;
        try {
            roots = dispersion_roots(t, th);
        } catch (const DegenerateDirectionError &) {
            continue;
        }
        const auto ref = printed_roots(t, th);
        const cplx Zxx = jj * t.xx, Zxy = jj * t.xy, Zyy = jj * t.yy;
        const double c = std::cos(th), s = std::sin(th);
        const cplx D = Zyy * c * c - Zxy * std::sin(2 * th) + Zxx * s * s;
        const cplx N = Zxx * c * c + Zxy * std::sin(2 * th) + Zyy * s * s;
        const cplx A = z0 * z0 - Zxy * Zxy + Zxx * Zyy;
        for (int k = 0; k < 2; ++k) {
            const cplx q = roots.roots[k];
            CHECK(std::abs(q - ref[k]) <= 1e-12 * std::max(1.0, std::abs(ref[k])));
            // Substituting back: 4 Z0^2 D^2 q^2 + 4 j A Z0 D q - 2 A^2 + 4 Z0^2 D N = 0.
            const cplx lhs = 4.0 * z0 * z0 * D * D * q * q + 4.0 * jj * A * z0 * D * q - 2.0 * A * A +
                             4.0 * z0 * z0 * D * N;
            const double scale = std::abs(A * A) + std::abs(4.0 * z0 * z0 * D * N);
            CHECK(std::abs(lhs) <= 1e-10 * scale);
        }
        if (roots.physical)
            CHECK(implied_reactance(roots.roots[*roots.physical]) > 0.0);
    }
}

TEST_CASE("dispersion roots: axis swap symmetry and isotropy")
{
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> diag(50.0, 500.0);
    std::uniform_real_distribution<double> ang(0.0, pi / 2);
    for (int n = 0; n < 500; ++n) {
        const double a = diag(rng), b = diag(rng), th = ang(rng);
        const auto r1 = dispersion_roots({a, 0.0, b}, th);
        const auto r2 = dispersion_roots({b, 0.0, a}, th + pi / 2);
        for (int k = 0; k < 2; ++k)
            CHECK(std::abs(r1.roots[k] - r2.roots[k]) <= 1e-10 * std::max(1.0, std::abs(r1.roots[k])));
    }
    const auto iso = Tensor2::isotropic(230.0);
    const auto ref = dispersion_roots(iso, 0.0);
    for (double th = 0.0; th < pi; th += 0.01) {
        const auto r = dispersion_roots(iso, th);
        for (int k = 0; k < 2; ++k)
            CHECK(std::abs(r.roots[k] - ref.roots[k]) <= 1e-10 * std::max(1.0, std::abs(ref.roots[k])));
    }
}

TEST_CASE("principal direction agrees with the dispersion sweep argmax")
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> big(60.0, 500.0);
    std::uniform_real_distribution<double> frac(0.05, 0.97);
    std::uniform_real_distribution<double> dir(0.0, pi);
    int checked = 0;
    while (checked < 1000) {
        // Inductive sheets are positive definite; for indefinite tensors the denominator
        // changes sign with theta_k and the sweep maximum is a pole, not a direction.
        const double l1 = big(rng), l2 = frac(rng) * l1, a = dir(rng);
        const double c = std::cos(a), s = std::sin(a);
        const Tensor2 t{l1 * c * c + l2 * s * s, (l1 - l2) * c * s, l1 * s * s + l2 * c * c};
        const auto d = max_impedance_direction(t);
        REQUIRE_FALSE(d.degenerate);
        CHECK(std::abs(rad_to_deg(d.angle_rad) - rad_to_deg(a)) < 1e-9);
        double best = -1e300, best_th = 0.0;
        for (int k = 0; k < 1800; ++k) {
            const double th = deg_to_rad(0.1 * k);
            try {
                const auto r = dispersion_roots(t, th);
                if (!r.physical)
                    continue;
                const double x = implied_reactance(r.roots[*r.physical]);
                if (x > best) {
                    best = x;
                    best_th = th;
                }
            } catch (const DegenerateDirectionError &) {
            }
        }
        double diff = std::abs(rad_to_deg(best_th - d.angle_rad));
        diff = std::min(diff, 180.0 - diff);
        INFO("tensor (" << t.xx << ", " << t.xy << ", " << t.yy << ")");
        CHECK(diff <= 1.0);
        ++checked;
    }
}
