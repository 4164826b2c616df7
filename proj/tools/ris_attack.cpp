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

// Command-line front end: runs one experiment and writes <out>/<name>.csv plus the
// resolved scenario as <out>/<name>.config.json.

#include "riscancel/results_io.hpp"
#include "riscancel/sweeps.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace riscancel;

namespace {

struct CommonOptions
{
    std::string config_path;
    std::string out_dir = "results";
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    unsigned threads = 1;
    std::optional<std::string> link_state;
};

void add_common(CLI::App *cmd, CommonOptions &opts)
{
    cmd->add_option("--config", opts.config_path, "Scenario JSON (keys missing from the file keep defaults)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--seed", opts.seed, "Master seed (overrides the config)");
    cmd->add_option("--trials", opts.trials, "Trials per sweep point (overrides the config)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", opts.threads, "Worker threads; results do not depend on it")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--link-state", opts.link_state, "Direct link state")
        ->check(CLI::IsMember({"los", "nlos"}));
}

ScenarioConfig resolve(const CommonOptions &opts)
{
    ScenarioConfig cfg;
    if (!opts.config_path.empty())
        cfg = load_scenario(opts.config_path);
    if (opts.seed)
        cfg.master_seed = *opts.seed;
    if (opts.trials)
        cfg.trials = *opts.trials;
    if (opts.link_state)
        cfg.link_state = link_state_from_string(*opts.link_state);
    validate(cfg);
    return cfg;
}

ArrayGeometry parse_array(const std::string &text)
{
    const auto x = text.find('x');
    if (x == std::string::npos)
        throw CLI::ValidationError("--arrays", "expected ROWSxCOLS, got '" + text + "'");
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1)), 0.5};
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Monte-Carlo simulator for RIS-assisted signal cancellation attacks"};
    app.require_subcommand(1);

    CommonOptions opts;

    auto *single = app.add_subcommand("single", "Run the configured scenario once");
    add_common(single, opts);

    std::vector<std::size_t> elements = kDefaultElementSweep;
    auto *sweep_el = app.add_subcommand("sweep-elements", "SNR versus the number of RIS elements");
    add_common(sweep_el, opts);
    sweep_el->add_option("--values", elements, "RIS element counts")->delimiter(',')->capture_default_str();

    std::vector<double> xs = default_position_sweep();
    double y = 5.0;
    std::vector<std::string> arrays{"2x2", "4x4", "8x8"};
    auto *sweep_pos = app.add_subcommand("sweep-position", "SNR versus RIS position along y = const");
    add_common(sweep_pos, opts);
    sweep_pos->add_option("--values", xs, "RIS x coordinates (m)")->delimiter(',')->capture_default_str();
    sweep_pos->add_option("--y", y, "RIS y coordinate (m)")->capture_default_str();
    sweep_pos->add_option("--arrays", arrays, "TX array sizes, ROWSxCOLS")->delimiter(',')->capture_default_str();

    std::vector<double> mse = kDefaultMseSweepDb;
    bool ablation = false;
    auto *sweep_mse_cmd = app.add_subcommand("sweep-mse", "SNR versus channel-estimate MSE");
    add_common(sweep_mse_cmd, opts);
    sweep_mse_cmd->add_option("--values", mse, "MSE levels (dB)")->delimiter(',')->capture_default_str();
    sweep_mse_cmd->add_flag("--ablation", ablation,
                            "Also run the per-link ablations (one link perfect, the others at the MSE level)");

    std::vector<int> bits{1, 2, 3, 4, 0};
    auto *sweep_q = app.add_subcommand("sweep-quantization", "SNR versus phase resolution");
    add_common(sweep_q, opts);
    sweep_q->add_option("--values", bits, "Phase bits; 0 means continuous phases")
        ->delimiter(',')
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try
    {
        const ScenarioConfig cfg = resolve(opts);
        const auto started = std::chrono::steady_clock::now();

        ResultTable table;
        if (single->parsed())
            table = run_single(cfg, opts.threads);
        else if (sweep_el->parsed())
            table = sweep_elements(cfg, elements, opts.threads);
        else if (sweep_pos->parsed())
        {
            std::vector<ArrayGeometry> geoms;
            for (const std::string &a : arrays)
                geoms.push_back(parse_array(a));
            table = sweep_position(cfg, xs, y, geoms, opts.threads);
        }
        else if (sweep_mse_cmd->parsed())
        {
            std::vector<MseMode> modes{MseMode::Joint};
            if (ablation)
                modes.insert(modes.end(), {MseMode::PerfectDirect, MseMode::PerfectTxRis, MseMode::PerfectRisRx});
            table = sweep_mse(cfg, mse, modes, opts.threads);
        }
        else
        {
            std::vector<std::optional<int>> resolutions;
            for (int b : bits)
                resolutions.push_back(b == 0 ? std::nullopt : std::optional<int>(b));
            table = sweep_quantization(cfg, resolutions, opts.threads);
        }

        const WrittenFiles files = write_results(table, opts.out_dir);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        std::cerr << "wrote " << files.csv.string() << " and " << files.config_json.string() << " ("
                  << table.rows.size() << " rows, " << seconds << " s)\n";
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
