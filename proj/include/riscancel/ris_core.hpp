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

#include "riscancel/geometry_channel.hpp"

#include <optional>
#include <span>
#include <vector>

namespace riscancel {

/// SNR reported for a received power of exactly zero (or anything below the floor).
inline constexpr double kSnrFloorDb = -200.0;

/// Per-element reflection r_i = beta_i * exp(j phi_i) of a passive surface.
struct RisConfiguration
{
    std::vector<double> beta;
    std::vector<double> phi;
    std::optional<int> bits; // phase resolution, unset for continuous phases

    std::size_t size() const { return beta.size(); }
};

struct LinkBudget
{
    double tx_power_dbm = 20.0;
    double noise_floor_dbm = -90.0;

    double tx_power_w() const { return db_to_linear(tx_power_dbm - 30.0); }
    double noise_w() const { return db_to_linear(noise_floor_dbm - 30.0); }
};

void validate(const LinkBudget &budget);

/// Checks 0 <= beta <= 1, matching lengths and, if bits is set, that every phase
/// lies on the 2^bits grid.
void validate(const RisConfiguration &cfg);

/// All-absorbing surface (beta = 0), equivalent to no RIS.
RisConfiguration inactive_configuration(std::size_t elements);

/// Maps a phase to [0, 2 pi).
double wrap_phase(double phi);

CVector reflection_coefficients(const RisConfiguration &cfg);

/// Nearest point of {2 pi k / 2^bits} under circular distance; exact ties go to
/// the smaller k (k = 0 when the tie straddles 2 pi).
std::vector<double> quantize_phases(std::span<const double> phi, int bits);

/// h_direct^T w.
cdouble direct_term(const ChannelSet &ch, const CVector &w);

/// c = h_direct^T w + sum_i r_i h_ris_rx,i (H w)_i. Plain transpose, no conjugation.
cdouble effective_scalar_channel(const ChannelSet &ch, const RisConfiguration &cfg,
                                 const CVector &w);
cdouble effective_scalar_channel(const ChannelSet &ch, const CVector &reflections,
                                 const CVector &w);

/// Watts, P_tx |c|^2.
double received_power(cdouble c, const LinkBudget &budget);

/// 10 log10(received / noise), floored at kSnrFloorDb.
double snr_db(double received_w, const LinkBudget &budget);

} // namespace riscancel
