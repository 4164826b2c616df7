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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>

namespace riscancel {

using cdouble = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// All randomness flows through explicitly passed engines of this type.
using Rng = std::mt19937_64;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Point2
{
    double x = 0.0;
    double y = 0.0;
};

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Circularly-symmetric complex normal with unit variance, E|z|^2 = 1.
cdouble sample_complex_normal(Rng &rng);

} // namespace riscancel
