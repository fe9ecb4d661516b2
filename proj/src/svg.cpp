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

#include "jha/svg.hpp"

#include "jha/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace jha::svg {

namespace {

struct Rgb {
    double r, g, b;
};

constexpr std::array<Rgb, 5> anchors{{{13, 8, 135}, {33, 102, 172}, {53, 183, 121}, {253, 231, 37}, {215, 48, 39}}};

std::string color(double t)
{
    t = std::clamp(t, 0.0, 1.0);
    const double pos = t * (anchors.size() - 1);
    const auto k = std::min(static_cast<std::size_t>(pos), anchors.size() - 2);
    const double f = pos - k;
    auto mix = [&](double a, double b) { return static_cast<int>(std::lround(a + f * (b - a))); };
    const auto &a = anchors[k];
    const auto &b = anchors[k + 1];
    return "rgb(" + std::to_string(mix(a.r, b.r)) + "," + std::to_string(mix(a.g, b.g)) + "," +
           std::to_string(mix(a.b, b.b)) + ")";
}

std::string escape(const std::string &s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

} // namespace

std::string heatmap(const std::vector<double> &values, int nx, int ny, double vmin, double vmax,
                    const std::string &title)
{
    const double span = vmax > vmin ? vmax - vmin : 1.0;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<!-- linear colour scale: value " + io::format_double(vmin) + " = rgb(13,8,135), " +
           io::format_double(vmax) +
           " = rgb(215,48,39); anchors at 0, 0.25, 0.5, 0.75, 1 of the range interpolated linearly -->\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + std::to_string(nx) + " " +
           std::to_string(ny + 2) + "\" shape-rendering=\"crispEdges\">\n";
    out += "<title>" + escape(title) + "</title>\n";
    out += "<text x=\"0\" y=\"1.5\" font-size=\"1.5\">" + escape(title) + "</text>\n";
    out += "<g transform=\"translate(0 2)\">\n";
    for (int ix = 0; ix < nx; ++ix) {
        for (int iy = 0; iy < ny; ++iy) {
            const double v = values[static_cast<std::size_t>(ix) * ny + iy];
            if (!std::isfinite(v))
                continue;
            out += "<rect x=\"" + std::to_string(ix) + "\" y=\"" + std::to_string(ny - 1 - iy) +
                   "\" width=\"1\" height=\"1\" fill=\"" + color((v - vmin) / span) + "\"/>\n";
        }
    }
    out += "</g>\n</svg>\n";
    return out;
}

std::string heatmap_autoscale(const std::vector<double> &values, int nx, int ny, const std::string &title)
{
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : values) {
        if (!std::isfinite(v))
            continue;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!std::isfinite(lo)) {
        lo = 0.0;
        hi = 1.0;
    }
    return heatmap(values, nx, ny, lo, hi, title);
}

} // namespace jha::svg
