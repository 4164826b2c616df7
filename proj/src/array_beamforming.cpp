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

#include "riscancel/array_beamforming.hpp"

#include <cmath>
#include <stdexcept>

namespace riscancel {

Direction make_direction(double azimuth_rad, double elevation_rad)
{
    double az = std::fmod(azimuth_rad + kPi, kTwoPi);
    if (az < 0.0)
        az += kTwoPi;
    az -= kPi;
    if (az >= kPi)
        az -= kTwoPi;
    if (elevation_rad < -kPi / 2 || elevation_rad > kPi / 2)
        throw std::invalid_argument("direction: elevation outside [-pi/2, pi/2]");
    return {az, elevation_rad};
}

void validate(const ArrayGeometry &geom)
{
    if (geom.rows < 1 || geom.cols < 1)
        throw std::invalid_argument("array: rows and cols must be positive");
    if (!(geom.spacing_wavelengths > 0.0))
        throw std::invalid_argument("array: spacing must be positive");
}

double azimuth_towards(Point2 from, Point2 to) { return std::atan2(to.y - from.y, to.x - from.x); }

CVector steering_vector(const ArrayGeometry &geom, const Direction &dir)
{
    validate(geom);
    const double u = std::sin(dir.azimuth_rad) * std::cos(dir.elevation_rad);
    const double v = std::sin(dir.elevation_rad);
    const double norm = 1.0 / std::sqrt(static_cast<double>(geom.element_count()));

    CVector a(geom.element_count());
    for (int m = 0; m < geom.rows; ++m)
        for (int n = 0; n < geom.cols; ++n)
        {
            const double phase = kTwoPi * geom.spacing_wavelengths * (m * u + n * v);
            a[m * geom.cols + n] = std::polar(norm, phase);
        }
    return a;
}

CVector precoder_towards(const ArrayGeometry &geom, Point2 tx, Point2 target)
{
    if (tx.x == target.x && tx.y == target.y)
        throw std::invalid_argument("precoder_towards: target coincides with transmitter");
    return steering_vector(geom, make_direction(azimuth_towards(tx, target)));
}

} // namespace riscancel
