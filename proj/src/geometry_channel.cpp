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

#include "riscancel/geometry_channel.hpp"

#include "riscancel/array_beamforming.hpp"
#include "riscancel/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace riscancel {

cdouble sample_complex_normal(Rng &rng)
{
    std::normal_distribution<double> component(0.0, std::sqrt(0.5));
    const double re = component(rng);
    const double im = component(rng);
    return {re, im};
}

double distance(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

void validate(const PathLossParams &params)
{
    if (!std::isfinite(params.reference_gain_db))
        throw std::invalid_argument("path loss: reference_gain_db must be finite");
    if (!(params.exponent >= 1.0))
        throw std::invalid_argument("path loss: exponent must be >= 1");
    if (!(params.min_distance_m > 0.0))
        throw std::invalid_argument("path loss: min_distance_m must be > 0");
}

double path_gain(const PathLossParams &params, double d)
{
    if (!(d >= 0.0))
        throw std::invalid_argument("path loss: distance must be >= 0");
    const double g0 = db_to_linear(params.reference_gain_db);
    return g0 * std::pow(std::max(d, params.min_distance_m), -params.exponent);
}

void validate(const Placement &placement, double far_field_min_m)
{
    const double d_direct = distance(placement.tx, placement.rx);
    const double d_tx_ris = distance(placement.tx, placement.ris);
    const double d_ris_rx = distance(placement.ris, placement.rx);
    if (!(d_direct > 0.0) || !(d_tx_ris > 0.0) || !(d_ris_rx > 0.0))
        throw std::invalid_argument("placement: nodes must not coincide");
    if (d_tx_ris < far_field_min_m || d_ris_rx < far_field_min_m)
        throw std::invalid_argument("placement: RIS closer than the far-field minimum of " +
                                    std::to_string(far_field_min_m) + " m");
}

ChannelSet compose_channels(FadingRealization fading, const LinkGains &gains)
{
    const Eigen::Index m = fading.tx_ris.size();
    const Eigen::Index nt = fading.response_rx.size();
    if (m == 0 || nt == 0)
        throw std::invalid_argument("channels: need at least one RIS element and one TX antenna");
    if (fading.ris_rx.size() != m || fading.response_ris.size() != nt)
        throw std::invalid_argument("channels: inconsistent fading dimensions");

    ChannelSet ch;
    ch.h_direct = std::sqrt(gains.direct) * fading.direct * fading.response_rx.conjugate();
    ch.h_tx_ris = std::sqrt(gains.tx_ris) * fading.tx_ris * fading.response_ris.adjoint();
    ch.h_ris_rx = std::sqrt(gains.ris_rx) * fading.ris_rx;
    ch.large_scale = gains;
    ch.fading = std::move(fading);
    return ch;
}

LinkGains large_scale_gains(const ScenarioConfig &scenario)
{
    const Placement &p = scenario.placement;
    return {
        path_gain(scenario.direct_pathloss(), distance(p.tx, p.rx)),
        path_gain(scenario.pathloss.tx_ris, distance(p.tx, p.ris)),
        path_gain(scenario.pathloss.ris_rx, distance(p.ris, p.rx)),
    };
}

ChannelSet sample_channels(const ScenarioConfig &scenario, Rng &rng)
{
    const auto m = static_cast<Eigen::Index>(scenario.ris_elements);
    const int nt = scenario.array.element_count();
    if (m <= 0 || nt <= 0)
        throw std::invalid_argument("sample_channels: M and N_t must be positive");
    validate(scenario.placement, scenario.far_field_min_m);

    const Placement &p = scenario.placement;
    const double gain = std::sqrt(static_cast<double>(nt));

    FadingRealization fading;
    fading.response_rx = gain * precoder_towards(scenario.array, p.tx, p.rx);
    fading.response_ris = gain * precoder_towards(scenario.array, p.tx, p.ris);
    fading.direct = sample_complex_normal(rng);
    fading.tx_ris.resize(m);
    fading.ris_rx.resize(m);
    for (Eigen::Index i = 0; i < m; ++i)
        fading.tx_ris[i] = sample_complex_normal(rng);
    for (Eigen::Index i = 0; i < m; ++i)
        fading.ris_rx[i] = sample_complex_normal(rng);

    return compose_channels(std::move(fading), large_scale_gains(scenario));
}

} // namespace riscancel
