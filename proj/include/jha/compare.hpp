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

// Proposed-vs-baseline cross-polarisation comparison for a single-beam CP
// aperture. The proposed aperture uses the closed-form CP tensor; a baseline
// records an alternative object-wave polarisation through the interference
// tensor.
//
// Baselines (amplitudes at x = 0, all times exp(-j k0 x sin(theta_L))), shown for LHCP;
// RHCP flips the sign of the y entry:
//   proposed    closed form itself
//   transverse  (-j, 1, 0)                      proposed object wave without E_z
//   projected   (-j cos(theta_L), 1, j sin(theta_L))  -j theta_hat + phi_hat at the beam
//   custom:ax,ay[,az]  complex entries written re+imj / re-imj / re
// Only the in-plane entries reach the tensor, so "transverse" records the same
// hologram as "proposed".

#include "jha/aperture.hpp"
#include "jha/design_spec.hpp"
#include "jha/tensor.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace jha::compare {

const std::vector<std::string> &baseline_names();

/// Object-wave polarisation for a named baseline. Throws UsageError listing the
/// available names for an unknown selector or malformed custom entry.
CVec3 baseline_polarization(std::string_view name, double theta_l_rad, Handedness h);

struct ComparisonRun {
    aperture::FarField proposed;
    aperture::FarField baseline;
    aperture::CrossPolReport report;
};

/// Single-beam apertures at the band centre (mean reactance and modulation of the two
/// band edges), radiated at the band centre on the phi = phi_cut plane.
ComparisonRun run_comparison(const DesignSpec &spec, std::string_view baseline, double theta_l_rad,
                             double phi_cut_deg = 0.0, double step_deg = 0.5);

/// Band-centre single-frequency parameters of a design.
BandEdge center_band(const DesignSpec &spec);

} // namespace jha::compare
