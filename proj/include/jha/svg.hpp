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

#pragma once

#include <string>
#include <vector>

namespace jha::svg {

/// Heatmap of an nx x ny grid (x index major, value[ix * ny + iy]); iy grows upward.
/// Colour scale is linear in value from vmin to vmax through five anchors
/// (dark blue, blue, green, yellow, red); non-finite values are left blank.
/// The scale and range are recorded in a comment at the top of the document.
std::string heatmap(const std::vector<double> &values, int nx, int ny, double vmin, double vmax,
                    const std::string &title);

/// Heatmap spanning the data's own min/max.
std::string heatmap_autoscale(const std::vector<double> &values, int nx, int ny, const std::string &title);

} // namespace jha::svg
