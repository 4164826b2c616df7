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

#include "riscancel/scenario.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace riscancel {

enum class Arm
{
    NoRis = 0,
    RandomPhase = 1,
    Attack = 2
};

inline constexpr std::array<Arm, 3> kArms{Arm::NoRis, Arm::RandomPhase, Arm::Attack};

std::string_view arm_name(Arm arm);

struct TrialRecord
{
    std::uint64_t trial_index = 0;
    std::array<double, 3> snr_db{}; // indexed by Arm

    double operator[](Arm arm) const { return snr_db[static_cast<std::size_t>(arm)]; }
};

struct SummaryStats
{
    Arm arm = Arm::NoRis;
    std::size_t n = 0;
    double mean_snr_db = 0.0;
    double env_low_db = 0.0;  // 2.5th percentile
    double env_high_db = 0.0; // 97.5th percentile
};

struct MonteCarloResult
{
    std::vector<TrialRecord> trials; // sorted by trial_index
    std::array<SummaryStats, 3> summary;

    const SummaryStats &operator[](Arm arm) const { return summary[static_cast<std::size_t>(arm)]; }
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of one trial: mix64(mix64(mix64(master) ^ trial) ^ (point + 0x632be59bd9b4e019)).
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index,
                         std::uint64_t sweep_point_index);

/// Independent sub-streams of one trial.
enum class TrialStream : std::uint64_t
{
    Channels = 1,
    CsiError = 2,
    RandomPhase = 3
};

Rng trial_stream(std::uint64_t trial_seed, TrialStream stream);

/// Samples channels and evaluates the three arms on the true channels.
TrialRecord run_trial(const ScenarioConfig &cfg, std::uint64_t trial_index,
                      std::uint64_t sweep_point_index = 0);

/// Linear interpolation between order statistics (position p * (n - 1)).
double percentile(std::span<const double> sorted, double p);

SummaryStats summarize(Arm arm, std::span<const double> values);

/// Runs cfg.trials trials on `threads` workers. Output does not depend on `threads`.
MonteCarloResult run_monte_carlo(const ScenarioConfig &cfg, std::uint64_t sweep_point_index = 0,
                                 unsigned threads = 1);

} // namespace riscancel
