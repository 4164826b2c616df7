// SPDX-License-Identifier: Apache-2.0
//
// riscancel: Monte-Carlo simulator for RIS-assisted signal cancellation attacks
// Copyright (C) 2026 The riscancel authors
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

#include "riscancel/common.hpp"

namespace riscancel {

/// Uniform planar array; element (m, n) sits at row m, column n.
struct ArrayGeometry
{
    int rows = 4;
    int cols = 4;
    double spacing_wavelengths = 0.5;

    int element_count() const { return rows * cols; }
};

/// Azimuth in [-pi, pi), elevation in [-pi/2, pi/2]. Use make_direction to wrap.
struct Direction
{
    double azimuth_rad = 0.0;
    double elevation_rad = 0.0;
};

Direction make_direction(double azimuth_rad, double elevation_rad = 0.0);

void validate(const ArrayGeometry &geom);

/// Azimuth of the ray from `from` to `to`, measured from the +x axis.
double azimuth_towards(Point2 from, Point2 to);

/// Unit-norm steering vector. Entry (m, n), stored at index m * cols + n, is
///   exp(j 2 pi d (m u + n v)) / sqrt(N_t)
/// with direction cosines u = sin(az) cos(el) and v = sin(el). Broadside is az = 0.
CVector steering_vector(const ArrayGeometry &geom, const Direction &dir);

/// Steering vector aimed from tx at target in the horizontal plane.
CVector precoder_towards(const ArrayGeometry &geom, Point2 tx, Point2 target);

} // namespace riscancel
