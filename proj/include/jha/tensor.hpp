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

#include <array>
#include <complex>

namespace jha {

using cplx = std::complex<double>;

/// Complex in-plane vector (x, y).
struct CVec2 {
    cplx x{};
    cplx y{};
};

/// Complex 3-vector (x, y, z).
struct CVec3 {
    cplx x{};
    cplx y{};
    cplx z{};

    CVec2 transverse() const { return {x, y}; }
};

/// Symmetric 2x2 surface reactance tensor (Ω). The physical impedance is j times
/// this matrix; z_yx is z_xy by construction.
struct Tensor2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    double yx() const { return xy; }

    static Tensor2 isotropic(double x) { return {x, 0.0, x}; }

    CVec2 apply(const CVec2 &v) const { return {xx * v.x + xy * v.y, xy * v.x + yy * v.y}; }

    friend Tensor2 operator+(const Tensor2 &a, const Tensor2 &b) {
        return {a.xx + b.xx, a.xy + b.xy, a.yy + b.yy};
    }
    friend Tensor2 operator*(double s, const Tensor2 &a) { return {s * a.xx, s * a.xy, s * a.yy}; }
    friend bool operator==(const Tensor2 &, const Tensor2 &) = default;
};

} // namespace jha
