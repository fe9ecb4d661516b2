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

#include "jha/hologram.hpp"
#include "jha/unitcell.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace jha::layout {

/// Rectangular slot centred in each patch. Only its angle follows the design; the
/// dimensions are placeholders until a measured unit-cell characterisation is supplied.
struct SlotTemplate {
    double length_mm = 1.0;
    double width_mm = 0.2;

    friend bool operator==(const SlotTemplate &, const SlotTemplate &) = default;
};

struct CellGeometry {
    int i = 0;
    int j = 0;
    double w_mm = 0.0;           // patch width, p - g
    double g_mm = 0.0;           // gap to the neighbouring patch
    double slot_angle_deg = 0.0; // [0, 180)
    bool degenerate = false;     // isotropic cell, angle is nominal
    bool clamped = false;        // impedance was pulled into the curve range

    friend bool operator==(const CellGeometry &, const CellGeometry &) = default;
};

enum class ClampPolicy {
    clamp_with_warning,
    strict // out-of-range impedance is an error
};

/// Gap from the inverse Z(g) curve, slot along the max-impedance direction. Throws
/// OutOfRangeError in strict mode, ValidationError if the gap does not fit the lattice.
CellGeometry realize_cell(const hologram::CellImpedance &cell, const unitcell::ZgCurve &curve, double lattice_p_mm,
                          ClampPolicy policy = ClampPolicy::clamp_with_warning);

struct Layout {
    int n_cells = 0;
    double lattice_p_mm = 0.0;
    SlotTemplate slot{};
    std::vector<CellGeometry> cells; // i major

    double board_extent_mm() const { return n_cells * lattice_p_mm; }
    std::size_t clamped_count() const;

    friend bool operator==(const Layout &, const Layout &) = default;
};

/// Realises every cell. In clamp mode a single summary warning reports how many cells
/// were clamped.
Layout realize_layout(const hologram::TensorImpedanceField &field, const unitcell::ZgCurve &curve,
                      ClampPolicy policy = ClampPolicy::clamp_with_warning, SlotTemplate slot = {});

const std::vector<std::string> &export_formats();

/// Deterministic document in `format` (json, csv, svg). Throws UsageError listing the
/// supported formats otherwise. SVG uses 1 user unit = 1 mm.
std::string export_layout(const Layout &layout, std::string_view format);

Layout parse_layout_json(std::string_view text);

/// CSV carries only `i,j,g_mm,w_mm,slot_angle_deg`; lattice and slot come from the caller.
Layout parse_layout_csv(std::string_view text, double lattice_p_mm, SlotTemplate slot = {});

} // namespace jha::layout
