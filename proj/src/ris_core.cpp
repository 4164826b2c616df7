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

#include "riscancel/ris_core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace riscancel {

namespace {

// Quantization grid index nearest to phi; |frac - 0.5| below this counts as a tie.
constexpr double kTieTolerance = 1e-12;

int nearest_grid_index(double phi, int levels)
{
    const double step = kTwoPi / levels;
    const double x = wrap_phase(phi) / step;
    int k = static_cast<int>(std::floor(x));
    const double frac = x - k;
    if (std::abs(frac - 0.5) <= kTieTolerance)
        return (k + 1 == levels) ? 0 : k;
    if (frac > 0.5)
        ++k;
    return k % levels;
}

} // namespace

void validate(const LinkBudget &budget)
{
    if (!(budget.tx_power_dbm > budget.noise_floor_dbm))
        throw std::invalid_argument("link budget: tx power must exceed the noise floor");
}

void validate(const RisConfiguration &cfg)
{
    if (cfg.beta.size() != cfg.phi.size())
        throw std::invalid_argument("RIS configuration: beta and phi lengths differ");
    for (double b : cfg.beta)
        if (!(b >= 0.0 && b <= 1.0))
            throw std::invalid_argument("RIS configuration: beta outside [0, 1]");
    for (double p : cfg.phi)
        if (!(p >= 0.0 && p < kTwoPi))
            throw std::invalid_argument("RIS configuration: phi outside [0, 2 pi)");
    if (cfg.bits)
    {
        if (*cfg.bits < 1)
            throw std::invalid_argument("RIS configuration: bits must be >= 1");
        const int levels = 1 << *cfg.bits;
        const double step = kTwoPi / levels;
        for (double p : cfg.phi)
            if (std::abs(p - nearest_grid_index(p, levels) * step) > 1e-9)
                throw std::invalid_argument("RIS configuration: phase off the quantization grid");
    }
}

RisConfiguration inactive_configuration(std::size_t elements)
{
    return {std::vector<double>(elements, 0.0), std::vector<double>(elements, 0.0), std::nullopt};
}

double wrap_phase(double phi)
{
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0)
        w += kTwoPi;
    return w >= kTwoPi ? 0.0 : w;
}

CVector reflection_coefficients(const RisConfiguration &cfg)
{
    validate(cfg);
    CVector r(static_cast<Eigen::Index>(cfg.size()));
    for (std::size_t i = 0; i < cfg.size(); ++i)
        r[static_cast<Eigen::Index>(i)] = std::polar(cfg.beta[i], cfg.phi[i]);
    return r;
}

std::vector<double> quantize_phases(std::span<const double> phi, int bits)
{
    if (bits < 1 || bits > 30)
        throw std::invalid_argument("quantize_phases: bits must be in [1, 30]");
    const int levels = 1 << bits;
    const double step = kTwoPi / levels;
    std::vector<double> out;
    out.reserve(phi.size());
    for (double p : phi)
        out.push_back(nearest_grid_index(p, levels) * step);
    return out;
}

cdouble direct_term(const ChannelSet &ch, const CVector &w)
{
    if (w.size() != ch.h_direct.size())
        throw std::invalid_argument("precoder length does not match the TX antenna count");
    return (ch.h_direct.transpose() * w)(0);
}

cdouble effective_scalar_channel(const ChannelSet &ch, const CVector &reflections, const CVector &w)
{
    const cdouble direct = direct_term(ch, w);
    if (reflections.size() != ch.h_ris_rx.size() || ch.h_tx_ris.rows() != ch.h_ris_rx.size())
        throw std::invalid_argument("reflection vector length does not match the RIS size");
    const CVector at_ris = ch.h_tx_ris * w;
    cdouble scattered{0.0, 0.0};
    for (Eigen::Index i = 0; i < reflections.size(); ++i)
        scattered += reflections[i] * ch.h_ris_rx[i] * at_ris[i];
    return direct + scattered;
}

cdouble effective_scalar_channel(const ChannelSet &ch, const RisConfiguration &cfg, const CVector &w)
{
    return effective_scalar_channel(ch, reflection_coefficients(cfg), w);
}

double received_power(cdouble c, const LinkBudget &budget) { return budget.tx_power_w() * std::norm(c); }

double snr_db(double received_w, const LinkBudget &budget)
{
    if (received_w < 0.0)
        throw std::invalid_argument("snr_db: negative received power");
    if (received_w == 0.0)
        return kSnrFloorDb;
    return std::max(10.0 * std::log10(received_w / budget.noise_w()), kSnrFloorDb);
}

} // namespace riscancel
