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

#include <numbers>

namespace jha {

/// Free-space wave impedance (Ω).
inline constexpr double z0 = 376.730313668;

/// Speed of light in vacuum (m/s).
inline constexpr double c0 = 299792458.0;

inline constexpr double pi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * pi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / pi; }

/// Free-space wavenumber (rad/m) at a frequency in GHz.
constexpr double wavenumber(double freq_ghz) { return 2.0 * pi * freq_ghz * 1e9 / c0; }

} // namespace jha
