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

#include "jha/aperture.hpp"

#include "jha/constants.hpp"
#include "jha/error.hpp"
#include "jha/io.hpp"
#include "jha/log.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace jha::aperture {

namespace {

constexpr cplx j1{0.0, 1.0};
constexpr double uv_limit = 1.2;
constexpr double uv_slack = 1e-12; // absorbs rounding in generated sample grids
constexpr double db_floor = -300.0;

double to_db(double magnitude, double reference)
{
    if (!(reference > 0.0) || !(magnitude > 0.0))
        return db_floor;
    return std::max(20.0 * std::log10(magnitude / reference), db_floor);
}

void check_uv(std::span<const UV> samples)
{
    for (const auto &s : samples)
        if (std::abs(s.u) > uv_limit + uv_slack || std::abs(s.v) > uv_limit + uv_slack)
            throw ValidationError("spectral sample (" + io::format_double(s.u) + ", " + io::format_double(s.v) +
                                  ") outside [-1.2, 1.2]^2");
}

void check_axis(std::span<const double> axis)
{
    for (double a : axis)
        if (std::abs(a) > uv_limit + uv_slack)
            throw ValidationError("spectral axis value " + io::format_double(a) + " outside [-1.2, 1.2]");
}

bool empty_with_warning(const ApertureField &ap, std::size_t n_samples)
{
    if (!ap.empty())
        return false;
    if (n_samples > 0)
        log::warn("empty aperture: spectral fields are identically zero");
    return true;
}

bool same_angle(double a_deg, double b_deg)
{
    double d = std::fmod(std::abs(a_deg - b_deg), 360.0);
    d = std::min(d, 360.0 - d);
    return d < 1e-9;
}

double wrap360(double deg)
{
    double w = std::fmod(deg, 360.0);
    if (w < 0.0)
        w += 360.0;
    return w;
}

const std::vector<cplx> &channel_for(const PatternCut &cut, Handedness h, bool co)
{
    const bool lhcp = (h == Handedness::lhcp) == co;
    return lhcp ? cut.e_lhcp : cut.e_rhcp;
}

} // namespace

bool ApertureField::empty() const
{
    if (xs.empty() || ys.empty())
        return true;
    for (std::size_t k = 0; k < ex.size(); ++k)
        if (ex[k] != cplx{} || ey[k] != cplx{})
            return false;
    return true;
}

ApertureField ApertureField::zeros(std::vector<double> xs, std::vector<double> ys, double dx, double dy,
                                   double freq_ghz)
{
    ApertureField ap;
    ap.xs = std::move(xs);
    ap.ys = std::move(ys);
    ap.dx = dx;
    ap.dy = dy;
    ap.freq_ghz = freq_ghz;
    const auto n = ap.xs.size() * ap.ys.size();
    ap.ex.assign(n, {});
    ap.ey.assign(n, {});
    ap.jx.assign(n, {});
    ap.jy.assign(n, {});
    ap.radiating.assign(n, true);
    return ap;
}

ApertureField aperture_fields(const hologram::TensorImpedanceField &field, const DesignSpec &spec, double freq_ghz)
{
    auto ap = aperture_fields(field, spec.average_reactance_at(freq_ghz), freq_ghz);
    if (!spec.in_band(freq_ghz)) {
        ap.extrapolated = true;
        log::warn("frequency " + io::format_double(freq_ghz) + " GHz outside design band [" +
                  io::format_double(spec.f_lower_ghz) + ", " + io::format_double(spec.f_upper_ghz) +
                  "] GHz; extrapolating the average reactance");
    }
    return ap;
}

ApertureField aperture_fields(const hologram::TensorImpedanceField &field, double x_avg_ohm, double freq_ghz)
{
    if (!(freq_ghz > 0.0))
        throw ValidationError("frequency must be positive");
    const int n = field.n_cells();
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (int k = 0; k < n; ++k) {
        xs[k] = field.at(k, 0).x_m;
        ys[k] = field.at(0, k).y_m;
    }
    auto ap = ApertureField::zeros(std::move(xs), std::move(ys), field.pitch_m(), field.pitch_m(), freq_ghz);
    const double k_sw = hologram::surface_index(x_avg_ohm) * wavenumber(freq_ghz);
    for (const auto &c : field.cells()) {
        const auto k = ap.index(c.i, c.j);
        const double r = std::hypot(c.x_m, c.y_m);
        if (c.region == hologram::Region::feed_excluded || r == 0.0) {
            ap.radiating[k] = false;
            continue;
        }
        const auto jv = hologram::surface_current(c.x_m, c.y_m, k_sw);
        const auto e = c.z.apply(jv);
        ap.jx[k] = jv.x;
        ap.jy[k] = jv.y;
        ap.ex[k] = e.x;
        ap.ey[k] = e.y;
    }
    return ap;
}

std::vector<Spectrum> spectral_fields_direct(const ApertureField &ap, std::span<const UV> samples)
{
    check_uv(samples);
    std::vector<Spectrum> out(samples.size());
    if (empty_with_warning(ap, samples.size()))
        return out;
    const double k0 = wavenumber(ap.freq_ghz);
    const double area = ap.dx * ap.dy;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        cplx fx{}, fy{};
        for (std::size_t ix = 0; ix < ap.nx(); ++ix) {
            for (std::size_t iy = 0; iy < ap.ny(); ++iy) {
                const auto k = ap.index(ix, iy);
                const cplx w = std::polar(1.0, k0 * (ap.xs[ix] * samples[s].u + ap.ys[iy] * samples[s].v));
                fx += ap.ex[k] * w;
                fy += ap.ey[k] * w;
            }
        }
        out[s] = {fx * area, fy * area};
    }
    return out;
}

std::vector<Spectrum> spectral_fields(const ApertureField &ap, std::span<const UV> samples)
{
    check_uv(samples);
    std::vector<Spectrum> out(samples.size());
    if (empty_with_warning(ap, samples.size()))
        return out;
    const double k0 = wavenumber(ap.freq_ghz);
    const double area = ap.dx * ap.dy;
    std::vector<cplx> px(ap.nx());
    std::vector<cplx> py(ap.ny());
    for (std::size_t s = 0; s < samples.size(); ++s) {
        for (std::size_t ix = 0; ix < ap.nx(); ++ix)
            px[ix] = std::polar(1.0, k0 * ap.xs[ix] * samples[s].u);
        for (std::size_t iy = 0; iy < ap.ny(); ++iy)
            py[iy] = std::polar(1.0, k0 * ap.ys[iy] * samples[s].v);
        cplx fx{}, fy{};
        for (std::size_t ix = 0; ix < ap.nx(); ++ix) {
            cplx rx{}, ry{};
            const auto base = ap.index(ix, 0);
            for (std::size_t iy = 0; iy < ap.ny(); ++iy) {
                rx += ap.ex[base + iy] * py[iy];
                ry += ap.ey[base + iy] * py[iy];
            }
            fx += px[ix] * rx;
            fy += px[ix] * ry;
        }
        out[s] = {fx * area, fy * area};
    }
    return out;
}

std::vector<Spectrum> spectral_grid(const ApertureField &ap, std::span<const double> us, std::span<const double> vs)
{
    check_axis(us);
    check_axis(vs);
    std::vector<Spectrum> out(us.size() * vs.size());
    if (empty_with_warning(ap, out.size()))
        return out;
    const double k0 = wavenumber(ap.freq_ghz);
    const double area = ap.dx * ap.dy;
    const auto nx = ap.nx();
    const auto ny = ap.ny();
    const auto nv = vs.size();

    // Pass 1: partial sums over y for every (x, v).
    std::vector<cplx> py(ny * nv);
    for (std::size_t iv = 0; iv < nv; ++iv)
        for (std::size_t iy = 0; iy < ny; ++iy)
            py[iv * ny + iy] = std::polar(1.0, k0 * ap.ys[iy] * vs[iv]);
    std::vector<cplx> gx(nx * nv), gy(nx * nv);
    for (std::size_t ix = 0; ix < nx; ++ix) {
        const auto base = ap.index(ix, 0);
        for (std::size_t iv = 0; iv < nv; ++iv) {
            cplx sx{}, sy{};
            const cplx *w = &py[iv * ny];
            for (std::size_t iy = 0; iy < ny; ++iy) {
                sx += ap.ex[base + iy] * w[iy];
                sy += ap.ey[base + iy] * w[iy];
            }
            gx[ix * nv + iv] = sx;
            gy[ix * nv + iv] = sy;
        }
    }
    // Pass 2: combine over x for every (u, v).
    std::vector<cplx> px(nx);
    for (std::size_t iu = 0; iu < us.size(); ++iu) {
        for (std::size_t ix = 0; ix < nx; ++ix)
            px[ix] = std::polar(1.0, k0 * ap.xs[ix] * us[iu]);
        for (std::size_t iv = 0; iv < nv; ++iv) {
            cplx fx{}, fy{};
            for (std::size_t ix = 0; ix < nx; ++ix) {
                fx += px[ix] * gx[ix * nv + iv];
                fy += px[ix] * gy[ix * nv + iv];
            }
            out[iu * nv + iv] = {fx * area, fy * area};
        }
    }
    return out;
}

std::pair<cplx, cplx> far_field_components(cplx fx, cplx fy, double theta_rad, double phi_rad)
{
    const double cp = std::cos(phi_rad);
    const double sp = std::sin(phi_rad);
    return {fx * cp + fy * sp, std::cos(theta_rad) * (-fx * sp + fy * cp)};
}

std::pair<cplx, cplx> cp_decompose(cplx e_theta, cplx e_phi)
{
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    return {(e_theta - j1 * e_phi) * inv_sqrt2, (e_theta + j1 * e_phi) * inv_sqrt2};
}

double axial_ratio(cplx e_lhcp, cplx e_rhcp)
{
    const double l = std::abs(e_lhcp);
    const double r = std::abs(e_rhcp);
    if (l == 0.0 && r == 0.0)
        throw UndefinedPolarizationError("axial ratio undefined: both CP channels are zero");
    const double diff = std::abs(l - r);
    if (diff == 0.0)
        return axial_ratio_ceiling_db;
    return std::min(20.0 * std::log10((l + r) / diff), axial_ratio_ceiling_db);
}

double FarField::peak_magnitude() const
{
    double peak = 0.0;
    for (const auto &s : samples)
        peak = std::max({peak, std::abs(s.e_theta), std::abs(s.e_phi), std::abs(s.e_lhcp), std::abs(s.e_rhcp)});
    return peak;
}

std::string FarField::to_csv() const
{
    const double ref = peak_magnitude();
    const double scale = ref > 0.0 ? 1.0 / ref : 0.0;
    std::string out = "theta_deg,phi_deg,eth_re,eth_im,eph_re,eph_im,elhcp_db,erhcp_db,ar_db\n";
    for (const auto &s : samples) {
        const cplx et = s.e_theta * scale;
        const cplx ep = s.e_phi * scale;
        std::string ar = "nan";
        if (s.e_lhcp != cplx{} || s.e_rhcp != cplx{})
            ar = io::format_double(axial_ratio(s.e_lhcp, s.e_rhcp));
        out += io::format_double(s.theta_deg) + ',' + io::format_double(s.phi_deg) + ',' +
               io::format_double(et.real()) + ',' + io::format_double(et.imag()) + ',' + io::format_double(ep.real()) +
               ',' + io::format_double(ep.imag()) + ',' + io::format_double(to_db(std::abs(s.e_lhcp), ref)) + ',' +
               io::format_double(to_db(std::abs(s.e_rhcp), ref)) + ',' + ar + '\n';
    }
    return out;
}

std::vector<Direction> cut_directions(std::span<const double> phi_cuts_deg, double step_deg)
{
    if (!(step_deg > 0.0))
        throw ValidationError("theta step must be positive");
    const int n = static_cast<int>(std::floor(90.0 / step_deg + 1e-9));
    std::vector<Direction> out;
    for (double phi : phi_cuts_deg) {
        for (double half : {wrap360(phi), wrap360(phi + 180.0)}) {
            for (int k = 0; k <= n; ++k)
                out.push_back({k * step_deg, half});
        }
    }
    return out;
}

FarField compute_far_field(const ApertureField &ap, std::span<const Direction> directions, std::string design_id)
{
    std::vector<UV> uv;
    uv.reserve(directions.size());
    for (const auto &d : directions) {
        const double st = std::sin(deg_to_rad(d.theta_deg));
        uv.push_back({st * std::cos(deg_to_rad(d.phi_deg)), st * std::sin(deg_to_rad(d.phi_deg))});
    }
    const auto spectra = spectral_fields(ap, uv);
    FarField ff;
    ff.freq_ghz = ap.freq_ghz;
    ff.design_id = std::move(design_id);
    ff.samples.reserve(directions.size());
    for (std::size_t k = 0; k < directions.size(); ++k) {
        const auto &d = directions[k];
        const auto [et, ep] =
            far_field_components(spectra[k].fx, spectra[k].fy, deg_to_rad(d.theta_deg), deg_to_rad(d.phi_deg));
        const auto [el, er] = cp_decompose(et, ep);
        ff.samples.push_back({d.theta_deg, d.phi_deg, et, ep, el, er});
    }
    return ff;
}

std::vector<double> PatternCut::db(const std::vector<cplx> &channel) const
{
    std::vector<double> out(channel.size());
    for (std::size_t k = 0; k < channel.size(); ++k)
        out[k] = to_db(std::abs(channel[k]), reference);
    return out;
}

std::size_t PatternCut::argmax(const std::vector<cplx> &channel, double theta_min, double theta_max) const
{
    std::size_t best = theta_deg.size();
    double best_mag = -1.0;
    for (std::size_t k = 0; k < channel.size(); ++k) {
        if (theta_deg[k] < theta_min || theta_deg[k] > theta_max)
            continue;
        if (std::abs(channel[k]) > best_mag) {
            best_mag = std::abs(channel[k]);
            best = k;
        }
    }
    if (best == theta_deg.size())
        throw ValidationError("no cut samples in theta range [" + io::format_double(theta_min) + ", " +
                              io::format_double(theta_max) + "]");
    return best;
}

std::string PatternCut::to_csv() const
{
    std::string out = "theta_deg,etheta_db,ephi_db,elhcp_db,erhcp_db,ar_db\n";
    const auto t = db(e_theta);
    const auto p = db(e_phi);
    const auto l = db(e_lhcp);
    const auto r = db(e_rhcp);
    for (std::size_t k = 0; k < theta_deg.size(); ++k) {
        std::string ar = "nan";
        if (e_lhcp[k] != cplx{} || e_rhcp[k] != cplx{})
            ar = io::format_double(axial_ratio(e_lhcp[k], e_rhcp[k]));
        out += io::format_double(theta_deg[k]) + ',' + io::format_double(t[k]) + ',' + io::format_double(p[k]) + ',' +
               io::format_double(l[k]) + ',' + io::format_double(r[k]) + ',' + ar + '\n';
    }
    return out;
}

PatternCut pattern_cut(const FarField &ff, double phi_cut_deg)
{
    struct Entry {
        double theta;
        const FarFieldSample *s;
    };
    std::vector<Entry> entries;
    bool front_found = false;
    for (const auto &s : ff.samples) {
        if (same_angle(s.phi_deg, phi_cut_deg)) {
            entries.push_back({s.theta_deg, &s});
            front_found = true;
        } else if (same_angle(s.phi_deg, phi_cut_deg + 180.0) && s.theta_deg > 0.0) {
            entries.push_back({-s.theta_deg, &s});
        }
    }
    if (!front_found) {
        double nearest = 0.0;
        double best = 1e300;
        for (const auto &s : ff.samples) {
            double d = std::fmod(std::abs(s.phi_deg - phi_cut_deg), 360.0);
            d = std::min(d, 360.0 - d);
            if (d < best) {
                best = d;
                nearest = s.phi_deg;
            }
        }
        throw MissingCutError("no far-field samples on the phi = " + io::format_double(phi_cut_deg) +
                                  " deg cut; nearest available cut is phi = " + io::format_double(nearest) + " deg",
                              nearest);
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry &a, const Entry &b) { return a.theta < b.theta; });
    PatternCut cut;
    cut.phi_cut_deg = phi_cut_deg;
    for (const auto &e : entries) {
        cut.theta_deg.push_back(e.theta);
        cut.e_theta.push_back(e.s->e_theta);
        cut.e_phi.push_back(e.s->e_phi);
        cut.e_lhcp.push_back(e.s->e_lhcp);
        cut.e_rhcp.push_back(e.s->e_rhcp);
        cut.reference = std::max({cut.reference, std::abs(e.s->e_theta), std::abs(e.s->e_phi),
                                  std::abs(e.s->e_lhcp), std::abs(e.s->e_rhcp)});
    }
    return cut;
}

PhaseStats phase_relation(const PatternCut &cut, BeamRegion region, Handedness co_pol, double half_width_deg)
{
    std::size_t peak = 0;
    if (region == BeamRegion::cp_beam)
        peak = cut.argmax(channel_for(cut, co_pol, true), 1e-12, 90.0);
    else
        peak = cut.argmax(cut.e_phi, -90.0, -1e-12);
    PhaseStats st;
    st.center_deg = cut.theta_deg[peak];

    double total_peak = 0.0;
    for (std::size_t k = 0; k < cut.theta_deg.size(); ++k)
        total_peak = std::max(total_peak, std::hypot(std::abs(cut.e_theta[k]), std::abs(cut.e_phi[k])));
    const double floor = total_peak * std::pow(10.0, -20.0 / 20.0);

    double sum_c = 0.0, sum_s = 0.0, sum_ratio = 0.0;
    for (std::size_t k = 0; k < cut.theta_deg.size(); ++k) {
        if (std::abs(cut.theta_deg[k] - st.center_deg) > half_width_deg + 1e-9)
            continue;
        const double total = std::hypot(std::abs(cut.e_theta[k]), std::abs(cut.e_phi[k]));
        if (total < floor || cut.e_theta[k] == cplx{} || cut.e_phi[k] == cplx{})
            continue;
        const double d = std::arg(cut.e_phi[k] * std::conj(cut.e_theta[k]));
        sum_c += std::cos(d);
        sum_s += std::sin(d);
        sum_ratio += 20.0 * std::log10(std::abs(cut.e_phi[k]) / std::abs(cut.e_theta[k]));
        ++st.n_samples;
    }
    if (st.n_samples == 0)
        throw LowSignalError("no samples above -20 dB of the peak within +-" + io::format_double(half_width_deg) +
                             " deg of theta = " + io::format_double(st.center_deg) + " deg");
    st.mean_phase_deg = rad_to_deg(std::atan2(sum_s, sum_c));
    st.mean_ratio_db = sum_ratio / static_cast<double>(st.n_samples);
    return st;
}

BeamMetrics beam_metrics(const PatternCut &cut, Handedness co_pol)
{
    const auto &co = channel_for(cut, co_pol, true);
    const auto &cross = channel_for(cut, co_pol, false);
    BeamMetrics m;
    const auto cp = cut.argmax(co, 1e-12, 90.0);
    m.cp_peak_deg = cut.theta_deg[cp];
    m.cp_peak_db = to_db(std::abs(co[cp]), cut.reference);
    m.cp_axial_ratio_db = axial_ratio(cut.e_lhcp[cp], cut.e_rhcp[cp]);
    m.cp_suppression_db = to_db(std::abs(co[cp]), 1.0) - to_db(std::abs(cross[cp]), 1.0);
    const auto lp = cut.argmax(cut.e_phi, -90.0, -1e-12);
    m.lp_peak_deg = cut.theta_deg[lp];
    m.lp_peak_db = to_db(std::abs(cut.e_phi[lp]), cut.reference);
    m.lp_axial_ratio_db = axial_ratio(cut.e_lhcp[lp], cut.e_rhcp[lp]);
    m.lp_ephi_over_etheta_db = to_db(std::abs(cut.e_phi[lp]), 1.0) - to_db(std::abs(cut.e_theta[lp]), 1.0);
    m.cp_phase = phase_relation(cut, BeamRegion::cp_beam, co_pol);
    m.lp_phase = phase_relation(cut, BeamRegion::lp_beam, co_pol);
    return m;
}

CrossPolReport crosspol_report(const FarField &proposed, const FarField &baseline, double phi_cut_deg,
                               Handedness co_pol, double window_deg)
{
    const auto a = pattern_cut(proposed, phi_cut_deg);
    const auto b = pattern_cut(baseline, phi_cut_deg);
    if (a.theta_deg != b.theta_deg)
        throw ValidationError("cross-pol comparison needs identical theta sampling in both patterns");
    const auto &a_co = channel_for(a, co_pol, true);
    const double reference = std::abs(a_co[a.argmax(a_co)]);

    auto summarize = [&](const PatternCut &cut) {
        const auto &co = channel_for(cut, co_pol, true);
        const auto &cross = channel_for(cut, co_pol, false);
        PolarizationSummary s;
        const auto ic = cut.argmax(co);
        const auto ix = cut.argmax(cross, -window_deg, window_deg);
        s.copol_peak_deg = cut.theta_deg[ic];
        s.copol_peak_db = to_db(std::abs(co[ic]), reference);
        s.max_crosspol_deg = cut.theta_deg[ix];
        s.max_crosspol_db = to_db(std::abs(cross[ix]), reference);
        s.suppression_db = s.copol_peak_db - s.max_crosspol_db;
        return s;
    };
    CrossPolReport rep;
    rep.phi_cut_deg = phi_cut_deg;
    rep.proposed = summarize(a);
    rep.baseline = summarize(b);
    rep.suppression_delta_db = rep.proposed.suppression_db - rep.baseline.suppression_db;
    rep.copol_delta_db = rep.proposed.copol_peak_db - rep.baseline.copol_peak_db;
    return rep;
}

UVMap compute_uv_map(const ApertureField &ap, int n, double extent)
{
    if (n < 2 || !(extent > 0.0) || extent > uv_limit)
        throw ValidationError("u-v map needs n >= 2 and 0 < extent <= 1.2");
    UVMap map;
    map.n = n;
    map.extent = extent;
    map.axis.resize(n);
    for (int k = 0; k < n; ++k)
        map.axis[k] = -extent + 2.0 * extent * k / (n - 1);
    const auto spectra = spectral_grid(ap, map.axis, map.axis);
    map.cells.resize(spectra.size());
    map.visible.assign(spectra.size(), false);
    for (int iu = 0; iu < n; ++iu) {
        for (int iv = 0; iv < n; ++iv) {
            const auto k = static_cast<std::size_t>(iu) * n + iv;
            const double u = map.axis[iu];
            const double v = map.axis[iv];
            double rho2 = u * u + v * v;
            if (rho2 > 1.0 + uv_slack)
                continue;
            rho2 = std::min(rho2, 1.0); // grid points on the unit circle round either way
            map.visible[k] = true;
            const double theta = std::asin(std::sqrt(rho2));
            const double phi = rho2 > 0.0 ? std::atan2(v, u) : 0.0;
            const auto [et, ep] = far_field_components(spectra[k].fx, spectra[k].fy, theta, phi);
            const auto [el, er] = cp_decompose(et, ep);
            map.cells[k] = {rad_to_deg(theta), wrap360(rad_to_deg(phi)), et, ep, el, er};
        }
    }
    return map;
}

std::string UVMap::to_csv() const
{
    double ref = 0.0;
    for (std::size_t k = 0; k < cells.size(); ++k)
        if (visible[k])
            ref = std::max({ref, std::abs(cells[k].e_theta), std::abs(cells[k].e_phi), std::abs(cells[k].e_lhcp),
                            std::abs(cells[k].e_rhcp)});
    std::string out = "u,v,eth_db,eph_db,elhcp_db,erhcp_db\n";
    for (int iu = 0; iu < n; ++iu) {
        for (int iv = 0; iv < n; ++iv) {
            const auto k = static_cast<std::size_t>(iu) * n + iv;
            if (!visible[k])
                continue;
            const auto &c = cells[k];
            out += io::format_double(axis[iu]) + ',' + io::format_double(axis[iv]) + ',' +
                   io::format_double(to_db(std::abs(c.e_theta), ref)) + ',' +
                   io::format_double(to_db(std::abs(c.e_phi), ref)) + ',' +
                   io::format_double(to_db(std::abs(c.e_lhcp), ref)) + ',' +
                   io::format_double(to_db(std::abs(c.e_rhcp), ref)) + '\n';
        }
    }
    return out;
}

} // namespace jha::aperture
