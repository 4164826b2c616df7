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

struct ScenarioConfig;

/// Node positions of the transmitter, the receiver and the RIS (meters, planar).
struct Placement
{
    Point2 tx{0.0, 0.0};
    Point2 rx{50.0, 0.0};
    Point2 ris{45.0, 5.0};
};

/// Bounded log-distance path loss: gain = g0 * max(d, min_distance_m)^-exponent,
/// with g0 = 10^(reference_gain_db / 10) the power gain at 1 m.
struct PathLossParams
{
    double reference_gain_db = -30.0;
    double exponent = 2.0;
    double min_distance_m = 1.0;
};

/// State of the direct TX-RX link. RIS-adjacent links are always LoS.
enum class LinkState
{
    LoS,
    NLoS
};

/// Linear large-scale power gains of the three links.
struct LinkGains
{
    double direct = 0.0;
    double tx_ris = 0.0;
    double ris_rx = 0.0;
};

/// Unit-variance small-scale fading coefficients and the TX array responses that a
/// ChannelSet is composed from. Array responses have unit-modulus entries.
struct FadingRealization
{
    cdouble direct{0.0, 0.0};
    CVector tx_ris;       // one coefficient per RIS element
    CVector ris_rx;       // one coefficient per RIS element
    CVector response_rx;  // TX array response towards the receiver, length N_t
    CVector response_ris; // TX array response towards the RIS, length N_t
};

/// One realization of the three channels, large-scale gains included.
///
///   h_direct  = sqrt(G_d)  * g   * conj(response_rx)            (length N_t)
///   row i of H = sqrt(G_tr) * g_i * conj(response_ris)^T        (M x N_t)
///   h_ris_rx_i = sqrt(G_rr) * q_i                               (length M)
///
/// Channels pair with a precoder through a plain transpose, so the conjugated
/// array response gives full array gain for a precoder steered the same way.
struct ChannelSet
{
    CVector h_direct;
    CMatrix h_tx_ris;
    CVector h_ris_rx;
    LinkGains large_scale;
    FadingRealization fading;

    Eigen::Index tx_antennas() const { return h_direct.size(); }
    Eigen::Index ris_elements() const { return h_ris_rx.size(); }
};

double distance(Point2 p, Point2 q);

/// Never exceeds g0; distances below min_distance_m are clamped.
double path_gain(const PathLossParams &params, double d);

void validate(const PathLossParams &params);

/// Throws std::invalid_argument if any pairwise distance is zero or a RIS link is
/// shorter than far_field_min_m.
void validate(const Placement &placement, double far_field_min_m);

/// Builds the channel matrices from fading coefficients and large-scale gains.
ChannelSet compose_channels(FadingRealization fading, const LinkGains &gains);

/// Large-scale gains for the scenario geometry, LoS/NLoS exponent on the direct link.
LinkGains large_scale_gains(const ScenarioConfig &scenario);

/// Draws one independent Rayleigh realization of all three links.
ChannelSet sample_channels(const ScenarioConfig &scenario, Rng &rng);

} // namespace riscancel
