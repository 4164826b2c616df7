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

#include "riscancel/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace riscancel {

std::string_view arm_name(Arm arm)
{
    switch (arm)
    {
    case Arm::NoRis:
        return "no_ris";
    case Arm::RandomPhase:
        return "random_phase";
    case Arm::Attack:
        return "attack";
    }
    return "unknown";
}

std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index, std::uint64_t sweep_point_index)
{
    return mix64(mix64(mix64(master_seed) ^ trial_index) ^ (sweep_point_index + 0x632be59bd9b4e019ULL));
}

Rng trial_stream(std::uint64_t seed, TrialStream stream)
{
    return Rng(mix64(seed ^ (static_cast<std::uint64_t>(stream) * 0xd1b54a32d192ed03ULL)));
}

TrialRecord run_trial(const ScenarioConfig &cfg, std::uint64_t trial_index, std::uint64_t sweep_point_index)
{
    const std::uint64_t seed = trial_seed(cfg.master_seed, trial_index, sweep_point_index);
    Rng channel_rng = trial_stream(seed, TrialStream::Channels);
    Rng csi_rng = trial_stream(seed, TrialStream::CsiError);
    Rng phase_rng = trial_stream(seed, TrialStream::RandomPhase);

    const ChannelSet truth = sample_channels(cfg, channel_rng);
    const CVector w = precoder_towards(cfg.array, cfg.placement.tx, cfg.placement.rx);

    TrialRecord rec;
    rec.trial_index = trial_index;
    auto snr_of = [&](const RisConfiguration &ris) {
        return snr_db(received_power(effective_scalar_channel(truth, ris, w), cfg.budget), cfg.budget);
    };

    rec.snr_db[static_cast<std::size_t>(Arm::NoRis)] = snr_of(inactive_configuration(cfg.ris_elements));
    rec.snr_db[static_cast<std::size_t>(Arm::RandomPhase)] =
        snr_of(random_phase_config(cfg.ris_elements, phase_rng));

    const ChannelSet estimate = cfg.csi_error.perfect() ? truth : apply_csi_error(truth, cfg.csi_error, csi_rng);
    const AttackSolution attack = optimize_cancellation(estimate, w, cfg.phase_bits, cfg.budget);
    rec.snr_db[static_cast<std::size_t>(Arm::Attack)] = snr_of(attack.cfg);
    return rec;
}

double percentile(std::span<const double> sorted, double p)
{
    if (sorted.empty())
        throw std::invalid_argument("percentile of an empty sample");
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("percentile: p outside [0, 1]");
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

SummaryStats summarize(Arm arm, std::span<const double> values)
{
    if (values.empty())
        throw std::invalid_argument("summarize: no values");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    SummaryStats s;
    s.arm = arm;
    s.n = values.size();
    // Summed in trial order so the mean is independent of scheduling.
    s.mean_snr_db = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    s.env_low_db = percentile(sorted, 0.025);
    s.env_high_db = percentile(sorted, 0.975);
    return s;
}

MonteCarloResult run_monte_carlo(const ScenarioConfig &cfg, std::uint64_t sweep_point_index, unsigned threads)
{
    validate(cfg);
    MonteCarloResult result;
    result.trials.resize(cfg.trials);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < cfg.trials; i = next++)
        {
            try
            {
                result.trials[i] = run_trial(cfg, i, sweep_point_index);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next = cfg.trials;
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cfg.trials)));
    if (workers == 1)
        worker();
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    std::vector<double> column(cfg.trials);
    for (Arm arm : kArms)
    {
        for (std::size_t i = 0; i < cfg.trials; ++i)
            column[i] = result.trials[i][arm];
        result.summary[static_cast<std::size_t>(arm)] = summarize(arm, column);
    }
    return result;
}

} // namespace riscancel
