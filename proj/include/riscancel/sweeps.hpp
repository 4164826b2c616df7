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

#include "riscancel/monte_carlo.hpp"

#include <optional>
#include <string>
#include <vector>

namespace riscancel {

struct ResultRow
{
    std::string experiment;
    std::string sweep_param;
    double sweep_value = 0.0;
    SummaryStats stats;
};

/// Rows of one experiment plus the base scenario they were run from.
struct ResultTable
{
    std::string name; // file stem, e.g. "elements"
    ScenarioConfig config;
    std::vector<ResultRow> rows;

    /// Looks up one row; throws std::out_of_range when absent.
    const SummaryStats &at(const std::string &experiment, double sweep_value, Arm arm) const;
};

inline const std::vector<std::size_t> kDefaultElementSweep{10, 50, 150, 250, 350, 450};
inline const std::vector<double> kDefaultMseSweepDb{-80.0, -60.0, -40.0, -20.0, 0.0};
inline const std::vector<ArrayGeometry> kDefaultArraySweep{{2, 2, 0.5}, {4, 4, 0.5}, {8, 8, 0.5}};

std::vector<double> default_position_sweep(); // 0, 5, ..., 50

/// Which links carry the MSE in sweep_mse.
enum class MseMode
{
    Joint,          // all three links
    PerfectDirect,  // TX-RIS and RIS-RX only
    PerfectTxRis,   // direct and RIS-RX only
    PerfectRisRx    // direct and TX-RIS only
};

std::string experiment_name(MseMode mode);
CsiErrorModel csi_model_for(MseMode mode, double mse_db);

std::string array_label(const ArrayGeometry &geom); // "4x4"

ResultTable run_single(const ScenarioConfig &cfg, unsigned threads = 1);

ResultTable sweep_elements(const ScenarioConfig &base, const std::vector<std::size_t> &elements,
                           unsigned threads = 1);

/// RIS moved along (x, y) for every x, repeated per TX array. Experiments are
/// named "position_<rows>x<cols>".
ResultTable sweep_position(const ScenarioConfig &base, const std::vector<double> &xs, double y,
                           const std::vector<ArrayGeometry> &arrays, unsigned threads = 1);

ResultTable sweep_mse(const ScenarioConfig &base, const std::vector<double> &mse_db,
                      const std::vector<MseMode> &modes = {MseMode::Joint}, unsigned threads = 1);

/// Continuous phases are written with sweep_value 0.
ResultTable sweep_quantization(const ScenarioConfig &base,
                               const std::vector<std::optional<int>> &bits,
                               unsigned threads = 1);

} // namespace riscancel
