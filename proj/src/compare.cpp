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

#include "jha/compare.hpp"

#include "jha/error.hpp"
#include "jha/hologram.hpp"

#include <charconv>
#include <cmath>

namespace jha::compare {

namespace {

constexpr cplx j1{0.0, 1.0};

std::string choices()
{
    std::string s;
    for (const auto &n : baseline_names())
        s += (s.empty() ? "" : ", ") + n;
    return s + ", custom:ax,ay[,az]";
}

cplx parse_complex(std::string_view text, std::string_view full)
{
    auto bad = [&] { return UsageError("malformed custom baseline '" + std::string(full) + "'; choices: " + choices()); };
    if (text.empty())
        throw bad();
    double re = 0.0, im = 0.0;
    const char *p = text.data();
    const char *end = text.data() + text.size();
    if (text.back() == 'j') {
        // re+imj, re-imj, or imj
        --end;
        std::size_t split = std::string_view::npos;
        for (std::size_t k = text.size() - 2; k > 0; --k) {
            if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        if (split == std::string_view::npos) {
            auto r = std::from_chars(p, end, im);
            if (r.ec != std::errc{} || r.ptr != end)
                throw bad();
            return {0.0, im};
        }
        auto r1 = std::from_chars(p, p + split, re);
        const char *ims = p + split + (text[split] == '+' ? 1 : 0);
        auto r2 = std::from_chars(ims, end, im);
        if (r1.ec != std::errc{} || r1.ptr != p + split || r2.ec != std::errc{} || r2.ptr != end)
            throw bad();
        return {re, im};
    }
    auto r = std::from_chars(p, end, re);
    if (r.ec != std::errc{} || r.ptr != end)
        throw bad();
    return {re, 0.0};
}

} // namespace

const std::vector<std::string> &baseline_names()
{
    static const std::vector<std::string> names{"proposed", "transverse", "projected"};
    return names;
}

CVec3 baseline_polarization(std::string_view name, double theta_l_rad, Handedness h)
{
    const double ey = h == Handedness::lhcp ? 1.0 : -1.0;
    const double s = std::sin(theta_l_rad);
    const double c = std::cos(theta_l_rad);
    if (name == "proposed")
        return {-j1, ey, -j1 * s};
    if (name == "transverse")
        return {-j1, ey, 0.0};
    if (name == "projected")
        return {-j1 * c, ey, j1 * s};
    if (name.starts_with("custom:")) {
        std::vector<cplx> parts;
        std::string_view rest = name.substr(7);
        while (true) {
            const auto comma = rest.find(',');
            parts.push_back(parse_complex(rest.substr(0, comma), name));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        if (parts.size() < 2 || parts.size() > 3)
            throw UsageError("custom baseline needs 2 or 3 complex entries; choices: " + choices());
        return {parts[0], parts[1], parts.size() == 3 ? parts[2] : cplx{}};
    }
    throw UsageError("unknown baseline '" + std::string(name) + "'; choices: " + choices());
}

BandEdge center_band(const DesignSpec &spec)
{
    return {spec.center_freq_ghz(), 0.5 * (spec.x1_ohm + spec.x2_ohm), 0.5 * (spec.m1_ohm + spec.m2_ohm)};
}

ComparisonRun run_comparison(const DesignSpec &spec, std::string_view baseline, double theta_l_rad, double phi_cut_deg,
                             double step_deg)
{
    const auto pol = baseline_polarization(baseline, theta_l_rad, spec.handedness);
    const auto band = center_band(spec);
    const auto proposed_field = hologram::synthesize_single_beam(spec, band, theta_l_rad, spec.handedness);
    const auto baseline_field = baseline == "proposed"
                                    ? proposed_field
                                    : hologram::synthesize_interference(spec, band, theta_l_rad, pol);
    const double cuts[] = {phi_cut_deg};
    const auto dirs = aperture::cut_directions(cuts, step_deg);
    ComparisonRun run;
    run.proposed = aperture::compute_far_field(aperture::aperture_fields(proposed_field, band.x_avg_ohm, band.freq_ghz),
                                               dirs, spec.name + " proposed");
    run.baseline = aperture::compute_far_field(aperture::aperture_fields(baseline_field, band.x_avg_ohm, band.freq_ghz),
                                               dirs, spec.name + " baseline " + std::string(baseline));
    run.report = aperture::crosspol_report(run.proposed, run.baseline, phi_cut_deg, spec.handedness);
    return run;
}

} // namespace jha::compare
