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

#include "riscancel/sweeps.hpp"

#include <cmath>
#include <stdexcept>

namespace riscancel {

namespace {

void append(ResultTable &table, const std::string &experiment, const std::string &param, double value,
            const MonteCarloResult &mc)
{
    for (Arm arm : kArms)
        table.rows.push_back({experiment, param, value, mc[arm]});
}

} // namespace

const SummaryStats &ResultTable::at(const std::string &experiment, double sweep_value, Arm arm) const
{
    for (const ResultRow &row : rows)
        if (row.experiment == experiment && row.sweep_value == sweep_value && row.stats.arm == arm)
            return row.stats;
    throw std::out_of_range("no row for " + experiment + " at " + std::to_string(sweep_value));
}

std::vector<double> default_position_sweep()
{
    std::vector<double> xs;
    for (int x = 0; x <= 50; x += 5)
        xs.push_back(x);
    return xs;
}

std::string experiment_name(MseMode mode)
{
    switch (mode)
    {
    case MseMode::Joint:
        return "mse";
    case MseMode::PerfectDirect:
        return "mse_perfect_direct";
    case MseMode::PerfectTxRis:
        return "mse_perfect_tx_ris";
    case MseMode::PerfectRisRx:
        return "mse_perfect_ris_rx";
    }
    throw std::invalid_argument("unknown MSE mode");
}

CsiErrorModel csi_model_for(MseMode mode, double mse_db)
{
    CsiErrorModel model = CsiErrorModel::joint(mse_db);
    switch (mode)
    {
    case MseMode::Joint:
        break;
    case MseMode::PerfectDirect:
        model.mse_db_direct.reset();
        break;
    case MseMode::PerfectTxRis:
        model.mse_db_tx_ris.reset();
        break;
    case MseMode::PerfectRisRx:
        model.mse_db_ris_rx.reset();
        break;
    }
    return model;
}

std::string array_label(const ArrayGeometry &geom)
{
    return std::to_string(geom.rows) + "x" + std::to_string(geom.cols);
}

ResultTable run_single(const ScenarioConfig &cfg, unsigned threads)
{
    ResultTable table{"single", cfg, {}};
    append(table, "single", "ris_elements", static_cast<double>(cfg.ris_elements), run_monte_carlo(cfg, 0, threads));
    return table;
}

ResultTable sweep_elements(const ScenarioConfig &base, const std::vector<std::size_t> &elements, unsigned threads)
{
    if (elements.empty())
        throw std::invalid_argument("sweep_elements: empty element list");
    ResultTable table{"elements", base, {}};
    for (std::size_t p = 0; p < elements.size(); ++p)
    {
        ScenarioConfig cfg = base;
        cfg.ris_elements = elements[p];
        append(table, "elements", "ris_elements", static_cast<double>(elements[p]), run_monte_carlo(cfg, p, threads));
    }
    return table;
}

ResultTable sweep_position(const ScenarioConfig &base, const std::vector<double> &xs, double y,
                           const std::vector<ArrayGeometry> &arrays, unsigned threads)
{
    if (xs.empty() || arrays.empty())
        throw std::invalid_argument("sweep_position: empty position or array list");
    ResultTable table{"position", base, {}};
    std::uint64_t point = 0;
    for (const ArrayGeometry &array : arrays)
    {
        const std::string experiment = "position_" + array_label(array);
        for (double x : xs)
        {
            ScenarioConfig cfg = base;
            cfg.array = array;
            cfg.placement.ris = {x, y};
            append(table, experiment, "ris_x_m", x, run_monte_carlo(cfg, point++, threads));
        }
    }
    return table;
}

ResultTable sweep_mse(const ScenarioConfig &base, const std::vector<double> &mse_db,
                      const std::vector<MseMode> &modes, unsigned threads)
{
    if (mse_db.empty() || modes.empty())
        throw std::invalid_argument("sweep_mse: empty MSE or mode list");
    ResultTable table{"mse", base, {}};
    for (MseMode mode : modes)
        for (std::size_t p = 0; p < mse_db.size(); ++p)
        {
            ScenarioConfig cfg = base;
            cfg.csi_error = csi_model_for(mode, mse_db[p]);
            // The error level does not change the channel law, so every level and
            // mode runs on the same trial streams and comparisons are paired.
            append(table, experiment_name(mode), "mse_db", mse_db[p], run_monte_carlo(cfg, 0, threads));
        }
    return table;
}

ResultTable sweep_quantization(const ScenarioConfig &base, const std::vector<std::optional<int>> &bits,
                               unsigned threads)
{
    if (bits.empty())
        throw std::invalid_argument("sweep_quantization: empty resolution list");
    ResultTable table{"quantization", base, {}};
    for (std::size_t p = 0; p < bits.size(); ++p)
    {
        ScenarioConfig cfg = base;
        cfg.phase_bits = bits[p];
        // Same trial streams at every resolution, as in sweep_mse.
        append(table, "quantization", "phase_bits", bits[p] ? static_cast<double>(*bits[p]) : 0.0,
               run_monte_carlo(cfg, 0, threads));
    }
    return table;
}

} // namespace riscancel
