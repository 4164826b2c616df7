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

#include "riscancel/ris_core.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace riscancel {

/// Mean square error of the attacker's channel estimates, in dB per link.
/// An unset link is known perfectly. The error is relative to the unit-variance
/// fading, so 0 dB means error power equal to the fading power.
struct CsiErrorModel
{
    std::optional<double> mse_db_direct;
    std::optional<double> mse_db_tx_ris;
    std::optional<double> mse_db_ris_rx;

    static CsiErrorModel joint(double mse_db) { return {mse_db, mse_db, mse_db}; }
    bool perfect() const { return !mse_db_direct && !mse_db_tx_ris && !mse_db_ris_rx; }
};

/// Linear error variance; zero for an unset link.
double mse_linear(const std::optional<double> &mse_db);

/// Attacker's view of the channels: every fading coefficient x of a selected link
/// becomes x + sqrt(eps) n with n ~ CN(0, 1), and the channels are recomposed.
ChannelSet apply_csi_error(const ChannelSet &truth, const CsiErrorModel &model, Rng &rng);

/// Factorization c = c0 + sum_i r_i a_i of the effective channel.
struct CancellationTerms
{
    cdouble c0{0.0, 0.0};
    CVector a;

    cdouble recompose(const CVector &reflections) const;
};

CancellationTerms cancellation_terms(const ChannelSet &est, const CVector &w);

/// Anti-phase alignment: phi_i = wrap(arg c0 + pi - arg a_i), so that every
/// r_i a_i points opposite to c0. Elements with a_i = 0 get phi_i = 0.
std::vector<double> optimal_phases(const CancellationTerms &terms);

/// Exact minimizer of (c0_mag - sum beta_i a_mags_i)^2 over the unit box.
std::vector<double> optimal_magnitudes_colinear(double c0_mag, std::span<const double> a_mags);

struct CoordinateDescentSettings
{
    int max_sweeps = 200;
    double relative_tolerance = 1e-12;
    // Replace the coordinate-descent point by the exact minimizer when that is
    // strictly better.
    bool exact_finish = true;
};

struct MagnitudeSolution
{
    std::vector<double> beta;
    int sweeps = 0;
    double objective = 0.0;
    // Objective after initialization and after every coordinate update; filled
    // only when requested.
    std::vector<double> trace;
};

/// Cyclic coordinate descent for min |c0 + sum beta_i v_i|^2 over beta in [0,1]^M,
/// started from all-ones, followed by an exact projection onto the reachable set
/// (a planar zonotope). Elements with v_i = 0 are pinned to 0.
/// The objective never increases.
MagnitudeSolution optimal_magnitudes_general(cdouble c0, const CVector &v,
                                             const CoordinateDescentSettings &settings = {},
                                             bool record_trace = false);

struct AttackSolution
{
    RisConfiguration cfg;
    double predicted_power = 0.0; // watts, evaluated on the channels given to the optimizer
    int iterations = 0;           // coordinate-descent sweeps, 0 for the closed-form path
};

/// Two-stage optimizer: anti-phase alignment, optional phase quantization, then
/// the magnitude stage (closed form for continuous phases, coordinate descent
/// otherwise).
AttackSolution optimize_cancellation(const ChannelSet &est, const CVector &w,
                                     std::optional<int> bits, const LinkBudget &budget,
                                     const CoordinateDescentSettings &settings = {});

/// Unit amplitudes with phases uniform on [0, 2 pi).
RisConfiguration random_phase_config(std::size_t elements, Rng &rng);

struct BruteForceResult
{
    RisConfiguration cfg;
    double power = 0.0;
    std::uint64_t evaluated = 0;
};

inline constexpr std::uint64_t kBruteForceLimit = 10'000'000;

/// Exhaustive search over phases {2 pi k / 2^phase_bits} x beta_levels per element.
/// Requires M <= 8 and (2^b * |levels|)^M <= kBruteForceLimit.
BruteForceResult brute_force_min_power(const ChannelSet &ch, const CVector &w, int phase_bits,
                                       std::span<const double> beta_levels,
                                       const LinkBudget &budget);

} // namespace riscancel
