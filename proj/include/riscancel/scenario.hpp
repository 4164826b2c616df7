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

#include "riscancel/array_beamforming.hpp"
#include "riscancel/attacker.hpp"
#include "riscancel/geometry_channel.hpp"
#include "riscancel/ris_core.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace riscancel {

/// Path-loss parameters per link. The direct link picks los or nlos by LinkState.
///
/// The reference gains and exponents are calibration knobs. The RIS-adjacent
/// links default to -45 dB at 1 m so that a 450-element surface sits in the regime
/// where the continuous attack only occasionally reaches a perfect null.
struct PathLossSet
{
    PathLossParams direct_los{-30.0, 3.0, 1.0};
    PathLossParams direct_nlos{-30.0, 3.6, 1.0};
    PathLossParams tx_ris{-45.0, 2.2, 1.0};
    PathLossParams ris_rx{-45.0, 2.2, 1.0};
};

struct ScenarioConfig
{
    Placement placement;
    LinkState link_state = LinkState::LoS;
    ArrayGeometry array;
    std::size_t ris_elements = 450;
    LinkBudget budget;
    PathLossSet pathloss;
    CsiErrorModel csi_error; // all links unset = perfect CSI
    std::optional<int> phase_bits;
    std::size_t trials = 1000;
    std::uint64_t master_seed = 1;
    double far_field_min_m = 1.0;

    const PathLossParams &direct_pathloss() const
    {
        return link_state == LinkState::LoS ? pathloss.direct_los : pathloss.direct_nlos;
    }
};

void validate(const ScenarioConfig &cfg);

std::string to_string(LinkState state);
LinkState link_state_from_string(const std::string &text);

nlohmann::json to_json(const ScenarioConfig &cfg);

/// Overlays `j` onto `base`. Keys missing from `j` keep the base value; unknown
/// keys throw std::invalid_argument naming the offending path.
ScenarioConfig scenario_from_json(const nlohmann::json &j, ScenarioConfig base = {});

ScenarioConfig load_scenario(const std::string &path, ScenarioConfig base = {});

} // namespace riscancel
