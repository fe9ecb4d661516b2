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

// Aperture field integration: tangential aperture fields from the impedance
// boundary condition E = Z J, their 2D spectra
//
//     F(u, v) = sum_cells E(x', y') exp(+j k_0 (x' u + y' v)) dx' dy',
//
// and the far-field components
//
//     E_theta = F_x cos(phi) + F_y sin(phi)
//     E_phi   = cos(theta) (-F_x sin(phi) + F_y cos(phi)).
//
// Cells are ideal Huygens samples: no element pattern, coupling or edge
// diffraction. CP channels use E_L = (E_theta - j E_phi)/sqrt(2) and
// E_R = (E_theta + j E_phi)/sqrt(2), so E_phi leading E_theta by 90 deg is LHCP.

#include "jha/design_spec.hpp"
#include "jha/hologram.hpp"
#include "jha/tensor.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace jha::aperture {

/// Aperture samples on a rectangular grid, stored with the x index major.
struct ApertureField {
    std::vector<double> xs; // cell centres along x (m)
    std::vector<double> ys; // cell centres along y (m)
    double dx = 0.0;
    double dy = 0.0;
    double freq_ghz = 0.0;
    std::vector<cplx> ex;
    std::vector<cplx> ey;
    std::vector<cplx> jx;
    std::vector<cplx> jy;
    std::vector<bool> radiating; // false for feed-excluded cells (zeroed E)
    bool extrapolated = false;   // frequency outside the design band

    std::size_t nx() const { return xs.size(); }
    std::size_t ny() const { return ys.size(); }
    std::size_t index(std::size_t ix, std::size_t iy) const { return ix * ys.size() + iy; }
    bool empty() const;

    /// Zero-field aperture of the given shape.
    static ApertureField zeros(std::vector<double> xs, std::vector<double> ys, double dx, double dy, double freq_ghz);
};

/// E = Z J with J the reference current at the band-appropriate surface index. The
/// average reactance at `freq_ghz` is interpolated through the band edges; outside the
/// band a warning is logged and `extrapolated` is set.
ApertureField aperture_fields(const hologram::TensorImpedanceField &field, const DesignSpec &spec, double freq_ghz);

/// Same, with an explicit average reactance setting the guided index.
ApertureField aperture_fields(const hologram::TensorImpedanceField &field, double x_avg_ohm, double freq_ghz);

struct UV {
    double u = 0.0;
    double v = 0.0;
};

struct Spectrum {
    cplx fx{};
    cplx fy{};
};

/// Direct double sum, one exponential per cell per sample. Reference implementation.
std::vector<Spectrum> spectral_fields_direct(const ApertureField &ap, std::span<const UV> samples);

/// Separable evaluation: exp(j k0 (x u + y v)) = exp(j k0 x u) exp(j k0 y v), so each
/// sample needs nx + ny exponentials instead of nx * ny.
std::vector<Spectrum> spectral_fields(const ApertureField &ap, std::span<const UV> samples);

/// Spectrum on the outer product of `us` x `vs` (u index major) via two matrix passes.
std::vector<Spectrum> spectral_grid(const ApertureField &ap, std::span<const double> us, std::span<const double> vs);

std::pair<cplx, cplx> far_field_components(cplx fx, cplx fy, double theta_rad, double phi_rad);

std::pair<cplx, cplx> cp_decompose(cplx e_theta, cplx e_phi);

inline constexpr double axial_ratio_ceiling_db = 60.0;

/// 20 log10((|L| + |R|) / ||L| - |R||), capped at the ceiling. Throws
/// UndefinedPolarizationError when both channels vanish.
double axial_ratio(cplx e_lhcp, cplx e_rhcp);

struct Direction {
    double theta_deg = 0.0; // [0, 90]
    double phi_deg = 0.0;   // [0, 360)
};

struct FarFieldSample {
    double theta_deg = 0.0;
    double phi_deg = 0.0;
    cplx e_theta{};
    cplx e_phi{};
    cplx e_lhcp{};
    cplx e_rhcp{};
};

struct FarField {
    double freq_ghz = 0.0;
    std::string design_id;
    std::vector<FarFieldSample> samples;

    /// Largest channel magnitude over all samples; the normalisation reference.
    double peak_magnitude() const;

    /// `theta_deg,phi_deg,eth_re,eth_im,eph_re,eph_im,elhcp_db,erhcp_db,ar_db`, complex
    /// values divided by peak_magnitude().
    std::string to_csv() const;
};

/// theta in [0, 90] at `step_deg` on both half-planes (phi and phi + 180) of each cut.
std::vector<Direction> cut_directions(std::span<const double> phi_cuts_deg, double step_deg = 0.5);

FarField compute_far_field(const ApertureField &ap, std::span<const Direction> directions, std::string design_id = {});

/// 1D pattern over theta in [-90, 90]; negative theta reads the phi_cut + 180 half-plane.
struct PatternCut {
    double phi_cut_deg = 0.0;
    std::vector<double> theta_deg;
    std::vector<cplx> e_theta;
    std::vector<cplx> e_phi;
    std::vector<cplx> e_lhcp;
    std::vector<cplx> e_rhcp;
    double reference = 0.0; // common 0 dB magnitude: largest of the four channels on the cut

    std::vector<double> db(const std::vector<cplx> &channel) const;

    /// Index of the largest |channel| with theta in [theta_min, theta_max].
    std::size_t argmax(const std::vector<cplx> &channel, double theta_min = -90.0, double theta_max = 90.0) const;

    /// `theta_deg,etheta_db,ephi_db,elhcp_db,erhcp_db,ar_db`
    std::string to_csv() const;
};

/// Throws MissingCutError (carrying the nearest available cut) if phi_cut is absent.
PatternCut pattern_cut(const FarField &ff, double phi_cut_deg);

enum class BeamRegion {
    cp_beam, // co-polar CP peak on the theta > 0 side
    lp_beam  // E_phi peak on the theta < 0 side
};

struct PhaseStats {
    double center_deg = 0.0;      // beam peak the window is centred on
    double mean_phase_deg = 0.0;  // circular mean of arg(E_phi) - arg(E_theta)
    double mean_ratio_db = 0.0;   // mean of 20 log10(|E_phi| / |E_theta|)
    std::size_t n_samples = 0;
};

/// Phase relation over a +-half_width window around the region's peak. Samples below
/// -20 dB of the cut's strongest total field are ignored; if none remain, LowSignalError.
PhaseStats phase_relation(const PatternCut &cut, BeamRegion region, Handedness co_pol = Handedness::lhcp,
                          double half_width_deg = 5.0);

/// Peak angles and polarisation figures of a Janus pattern cut.
struct BeamMetrics {
    double cp_peak_deg = 0.0;
    double cp_peak_db = 0.0;            // co-pol CP level at its peak, relative to cut reference
    double cp_axial_ratio_db = 0.0;
    double cp_suppression_db = 0.0;     // co-pol minus cross-pol CP at the CP peak
    double lp_peak_deg = 0.0;
    double lp_peak_db = 0.0;
    double lp_axial_ratio_db = 0.0;
    double lp_ephi_over_etheta_db = 0.0; // at the LP peak
    PhaseStats cp_phase;
    PhaseStats lp_phase;
};

BeamMetrics beam_metrics(const PatternCut &cut, Handedness co_pol = Handedness::lhcp);

struct PolarizationSummary {
    double copol_peak_deg = 0.0;
    double copol_peak_db = 0.0;    // relative to the first design's co-pol peak
    double max_crosspol_db = 0.0;  // within +-60 deg, same reference
    double max_crosspol_deg = 0.0;
    double suppression_db = 0.0;   // copol_peak_db - max_crosspol_db
};

struct CrossPolReport {
    double phi_cut_deg = 0.0;
    PolarizationSummary proposed;
    PolarizationSummary baseline;
    double suppression_delta_db = 0.0; // proposed - baseline
    double copol_delta_db = 0.0;       // proposed - baseline
};

/// Compares co/cross-pol of two single-beam patterns on one cut. Both must share the
/// theta sampling (ValidationError otherwise).
CrossPolReport crosspol_report(const FarField &proposed, const FarField &baseline, double phi_cut_deg,
                               Handedness co_pol = Handedness::lhcp, double window_deg = 60.0);

/// Visible-space u-v map on an n x n grid over [-extent, extent]^2.
struct UVMap {
    int n = 0;
    double extent = 1.0;
    std::vector<double> axis;        // u and v sample values
    std::vector<FarFieldSample> cells; // u index major; theta/phi filled only when visible
    std::vector<bool> visible;

    /// `u,v,eth_db,eph_db,elhcp_db,erhcp_db`, visible samples only, normalised to the
    /// largest channel magnitude on the map.
    std::string to_csv() const;
};

UVMap compute_uv_map(const ApertureField &ap, int n = 201, double extent = 1.0);

} // namespace jha::aperture
