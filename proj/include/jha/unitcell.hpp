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

// Unit-cell characterisation: eigenmode phase sweeps -> effective scalar
// impedance -> invertible Z_eff-max(gap) curve used to realise the layout.
//
// Branch convention: for a bound wave (k_t > k_0) the normal wavenumber is
// k_z = -j*sqrt(k_t^2 - k_0^2) (field decays away from the surface). The
// stored quantity is the positive inductive reactance magnitude
// X = Z_0 * sqrt(k_t^2 - k_0^2) / k_0.

#include "jha/error.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace jha::unitcell {

struct DispersionRow {
    double gap_mm = 0.0;
    double freq_ghz = 0.0;
    double phi_x_rad = 0.0;
    double phi_y_rad = 0.0;
};

/// Eigenmode phase sweep for one slotted-patch unit cell. Immutable once built.
class DispersionTable {
public:
    /// Throws InvalidGeometryError for p <= 0 or gaps outside (0, p), InvalidTableError for
    /// duplicate (gap, freq) keys.
    DispersionTable(double periodicity_mm, std::vector<DispersionRow> rows);

    /// Parses the `g_mm,freq_ghz,phi_x_rad,phi_y_rad` CSV. Malformed rows raise
    /// ValidationError carrying the line number.
    static DispersionTable from_csv(std::string_view text, double periodicity_mm);
    std::string to_csv() const;

    double periodicity_mm() const { return periodicity_mm_; }
    const std::vector<DispersionRow> &rows() const { return rows_; }

private:
    double periodicity_mm_;
    std::vector<DispersionRow> rows_;
};

struct ZgKnot {
    double gap_mm = 0.0;
    double x_eff_ohm = 0.0;

    friend bool operator==(const ZgKnot &, const ZgKnot &) = default;
};

/// Strictly decreasing piecewise-linear Z_eff-max(g) relation. Knots are sorted by gap.
class ZgCurve {
public:
    /// Throws InvalidTableError unless knots (in any order) form a strictly decreasing,
    /// non-negative curve with at least two knots.
    explicit ZgCurve(std::vector<ZgKnot> knots);

    static ZgCurve from_csv(std::string_view text);
    std::string to_csv() const;

    const std::vector<ZgKnot> &knots() const { return knots_; }
    double min_reactance() const { return knots_.back().x_eff_ohm; }
    double max_reactance() const { return knots_.front().x_eff_ohm; }
    double min_gap() const { return knots_.front().gap_mm; }
    double max_gap() const { return knots_.back().gap_mm; }

    /// Forward evaluation; gap must lie within the knot span.
    double reactance_at(double gap_mm) const;

private:
    std::vector<ZgKnot> knots_;
};

struct WaveVector {
    double kx = 0.0;
    double ky = 0.0;
};

/// k = phase / p. Throws InvalidGeometryError for p <= 0.
WaveVector phases_to_wavevector(double phi_x_rad, double phi_y_rad, double periodicity_m);

double transverse_wavenumber(double kx, double ky);

/// Reactance magnitude of a bound TM surface wave. Throws FastWaveError when k_t < k_0.
double effective_impedance(double kt, double k0);

enum class MonotoneMode {
    reject, // non-monotone data raises NonMonotoneError
    force   // isotonic regression, pooled knots merged
};

/// Raised by build_zg_curve when the extracted curve is not strictly decreasing.
class NonMonotoneError : public InvalidTableError {
public:
    NonMonotoneError(const std::string &what, std::vector<ZgKnot> violations)
        : InvalidTableError(what), violations_(std::move(violations)) {}

    /// Knots whose reactance does not drop below the preceding knot's.
    const std::vector<ZgKnot> &violations() const { return violations_; }

private:
    std::vector<ZgKnot> violations_;
};

ZgCurve build_zg_curve(const DispersionTable &table, double freq_ghz, MonotoneMode mode = MonotoneMode::reject);

/// Gap realising `x_eff_ohm`. Exact at knots. Throws OutOfRangeError carrying the nearest
/// achievable reactance when the value lies outside the curve.
double invert_zg(const ZgCurve &curve, double x_eff_ohm);

/// Decreasing isotonic fit (pool-adjacent-violators, equal weights) of knots sorted by gap.
/// Pooled blocks collapse to a single knot at the mean gap.
std::vector<ZgKnot> isotonic_decreasing(const std::vector<ZgKnot> &sorted_knots);

/// Parameters of the bundled SYNTHETIC unit cell: X(g) = scale * (g / 1 mm)^-exponent.
/// Produces a Fig.-3-like decreasing curve; it is not measured or simulated data.
struct SyntheticCellModel {
    double periodicity_mm = 3.0;
    double scale_ohm = 230.0;
    double exponent = 0.45;
    double gap_min_mm = 0.1;
    double gap_max_mm = 2.0;
    int n_gaps = 40;
};

/// Synthetic eigenmode sweep (slot along phi = 0, so all phase accrues along x).
DispersionTable synthetic_dispersion_table(const SyntheticCellModel &model, const std::vector<double> &freqs_ghz);

} // namespace jha::unitcell
