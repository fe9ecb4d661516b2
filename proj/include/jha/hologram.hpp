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

// Holographic tensor impedance synthesis.
//
// The reference wave launched by the centre feed is the cylindrical surface
// current J = r_hat * exp(-j k_sw r) with k_sw = n_sw k_0. The object wave is a
// plane wave exp(-j k_0 x sin(theta_L)) with a fixed polarisation. Recording
// their interference in the anti-Hermitian tensor
//
//     Z = X I + (M/2) Im(E_t J^H - J E_t^H)
//
// gives closed forms in the holographic phase
//
//     gamma = k_0 x sin(theta_L) - n_sw k_0 r.
//
// With that sign the LHCP closed form is identical to the interference tensor
// built from E_t = (-j, 1) and radiates LHCP (E_phi leading E_theta) at +theta_L.

#include "jha/design_spec.hpp"
#include "jha/tensor.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jha::hologram {

/// Guided-wave index of an inductive reactance sheet: sqrt(1 + (X/Z_0)^2).
double surface_index(double x_avg_ohm);

/// Radial reference current r_hat * exp(-j k_sw r). Throws FeedRegionError for r == 0 or
/// r < exclusion_radius_m.
CVec2 surface_current(double x_m, double y_m, double k_sw, double exclusion_radius_m = 0.0);

/// Object wave for a CP beam at theta_L in the phi = 0 plane:
/// LHCP (-j, 1, -j sin), RHCP (-j, -1, -j sin), times exp(-j k_0 x sin(theta_L)).
CVec3 desired_erad(double x_m, Handedness h, double theta_l_rad, double k0);

/// Interference tensor X I + (M/2) Im(E_t J^H - J E_t^H). Only the in-plane block of
/// E_rad enters. Throws ValidationError when |J| is not 1.
Tensor2 tensor_from_interference(const CVec3 &e_rad, const CVec2 &j_surf, double x_avg_ohm, double m_ohm);

double holographic_phase(double x_m, double y_m, double freq_ghz, double theta_l_rad, double n_sw);

/// Single-frequency closed form (LHCP or RHCP). Throws FeedRegionError inside the
/// exclusion radius.
Tensor2 tensor_cp(double x_m, double y_m, const BandEdge &band, double theta_l_rad, Handedness h,
                  double exclusion_radius_m = 0.0);

/// Holograms sharing one feed differ in the sign pattern of the recorded
/// polarisation E_t = (s1 j, s2). `copolar` is the CP form itself, `partner` is its
/// Janus counterpart whose sum with the CP form is linear along y.
enum class HologramForm { copolar, partner };

/// Two-band average (D_c, D_s closed form) for a beam at theta_l_rad.
Tensor2 tensor_wideband(double x_m, double y_m, const DesignSpec &spec, double theta_l_rad, Handedness h,
                        HologramForm form = HologramForm::copolar);

enum class Region { cp_half, lp_half, feed_excluded };

std::string_view to_string(Region r);
Region parse_region(std::string_view s);

/// Which closed form a non-excluded cell receives in the Janus aperture.
struct JanusAssignment {
    Region region;
    HologramForm form;
    double theta_l_rad; // signed beam angle for this half
};

/// y >= 0: CP half. y < 0: checkerboard on (i + j) parity, odd -> partner form.
JanusAssignment janus_assignment(int i, int j, double y_m, const DesignSpec &spec);

Tensor2 tensor_janus(int i, int j, double x_m, double y_m, const DesignSpec &spec);

/// The two solutions k_z/k of the tensor dispersion relation along theta_k, plus the
/// index of the physical (bound, positive effective reactance) root.
struct DispersionRoots {
    std::array<cplx, 2> roots{}; // [0] '+' branch, [1] '-' branch
    std::optional<int> physical;
};

/// Tensor entries enter as impedances j*X. Throws DegenerateDirectionError when the
/// denominator vanishes.
DispersionRoots dispersion_roots(const Tensor2 &z, double theta_k_rad);

/// Effective reactance implied by a root, Im(Z_0 * k_z/k).
double implied_reactance(cplx kz_over_k);

struct PrincipalDirection {
    double angle_rad = 0.0; // folded to [0, pi)
    double x_eff_max_ohm = 0.0;
    bool degenerate = false;
};

PrincipalDirection max_impedance_direction(const Tensor2 &z);

struct CellImpedance {
    int i = 0;
    int j = 0;
    double x_m = 0.0;
    double y_m = 0.0;
    Tensor2 z{};
    double x_eff_max_ohm = 0.0;
    double direction_rad = 0.0;
    bool degenerate = false;
    Region region = Region::cp_half;
};

/// Square grid of cell impedances, stored with i (x index) major.
class TensorImpedanceField {
public:
    TensorImpedanceField(int n_cells, double pitch_m, std::vector<CellImpedance> cells);

    int n_cells() const { return n_; }
    double pitch_m() const { return pitch_m_; }
    const std::vector<CellImpedance> &cells() const { return cells_; }
    const CellImpedance &at(int i, int j) const { return cells_[static_cast<std::size_t>(i) * n_ + j]; }

    /// `i,j,x_mm,y_mm,zxx_ohm,zxy_ohm,zyy_ohm,xeffmax_ohm,angle_deg,region`
    std::string to_csv() const;
    static TensorImpedanceField from_csv(std::string_view text);

private:
    int n_;
    double pitch_m_;
    std::vector<CellImpedance> cells_;
};

/// Cell centre coordinate for index k on an n-cell side.
double cell_center_m(int k, int n_cells, double pitch_m);

/// Janus dual-polarised aperture.
TensorImpedanceField synthesize_field(const DesignSpec &spec);

/// Single-beam field from any per-cell rule. The rule is called only outside the feed
/// exclusion disk; excluded cells get the isotropic average reactance.
using CellRule = std::function<Tensor2(int i, int j, double x_m, double y_m)>;
TensorImpedanceField synthesize_with(const DesignSpec &spec, double unmodulated_ohm, const CellRule &rule);

/// Single-frequency single-beam CP aperture from the closed form.
TensorImpedanceField synthesize_single_beam(const DesignSpec &spec, const BandEdge &band, double theta_l_rad,
                                            Handedness h);

/// Single-frequency single-beam aperture from the interference tensor with an arbitrary
/// object-wave polarisation (amplitudes at x = 0).
TensorImpedanceField synthesize_interference(const DesignSpec &spec, const BandEdge &band, double theta_l_rad,
                                             const CVec3 &polarization);

} // namespace jha::hologram
