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

#include "riscancel/scenario.hpp"

#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string_view>

namespace riscancel {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json &j, std::string_view where, std::initializer_list<std::string_view> allowed)
{
    if (!j.is_object())
        throw std::invalid_argument("config: '" + std::string(where) + "' must be an object");
    for (const auto &item : j.items())
    {
        bool known = false;
        for (std::string_view key : allowed)
            known = known || item.key() == key;
        if (!known)
            throw std::invalid_argument("config: unknown key '" + std::string(where) + "." + item.key() + "'");
    }
}

template <typename T>
void read(const json &j, const char *key, T &out)
{
    if (auto it = j.find(key); it != j.end())
        out = it->get<T>();
}

template <typename T>
void read_optional(const json &j, const char *key, std::optional<T> &out)
{
    if (auto it = j.find(key); it != j.end())
        out = it->is_null() ? std::nullopt : std::optional<T>(it->get<T>());
}

json point_json(Point2 p) { return json::array({p.x, p.y}); }

void read_point(const json &j, const char *key, Point2 &out)
{
    auto it = j.find(key);
    if (it == j.end())
        return;
    if (!it->is_array() || it->size() != 2)
        throw std::invalid_argument(std::string("config: placement.") + key + " must be [x, y]");
    out = {(*it)[0].get<double>(), (*it)[1].get<double>()};
}

json pathloss_json(const PathLossParams &p)
{
    return {{"reference_gain_db", p.reference_gain_db}, {"exponent", p.exponent}, {"min_distance_m", p.min_distance_m}};
}

void read_pathloss(const json &j, const char *key, PathLossParams &out)
{
    auto it = j.find(key);
    if (it == j.end())
        return;
    reject_unknown_keys(*it, std::string("pathloss.") + key, {"reference_gain_db", "exponent", "min_distance_m"});
    read(*it, "reference_gain_db", out.reference_gain_db);
    read(*it, "exponent", out.exponent);
    read(*it, "min_distance_m", out.min_distance_m);
}

json optional_json(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

} // namespace

std::string to_string(LinkState state) { return state == LinkState::LoS ? "los" : "nlos"; }

LinkState link_state_from_string(const std::string &text)
{
    if (text == "los")
        return LinkState::LoS;
    if (text == "nlos")
        return LinkState::NLoS;
    throw std::invalid_argument("link state must be 'los' or 'nlos', got '" + text + "'");
}

void validate(const ScenarioConfig &cfg)
{
    validate(cfg.placement, cfg.far_field_min_m);
    validate(cfg.array);
    validate(cfg.budget);
    validate(cfg.pathloss.direct_los);
    validate(cfg.pathloss.direct_nlos);
    validate(cfg.pathloss.tx_ris);
    validate(cfg.pathloss.ris_rx);
    if (cfg.ris_elements < 1)
        throw std::invalid_argument("config: ris_elements must be >= 1");
    if (cfg.trials < 1)
        throw std::invalid_argument("config: trials must be >= 1");
    if (cfg.phase_bits && (*cfg.phase_bits < 1 || *cfg.phase_bits > 30))
        throw std::invalid_argument("config: phase_bits must be in [1, 30] or null");
    if (!(cfg.far_field_min_m > 0.0))
        throw std::invalid_argument("config: far_field_min_m must be > 0");
    mse_linear(cfg.csi_error.mse_db_direct);
    mse_linear(cfg.csi_error.mse_db_tx_ris);
    mse_linear(cfg.csi_error.mse_db_ris_rx);
}

json to_json(const ScenarioConfig &cfg)
{
    json j;
    j["placement"] = {{"tx", point_json(cfg.placement.tx)},
                      {"rx", point_json(cfg.placement.rx)},
                      {"ris", point_json(cfg.placement.ris)}};
    j["link_state"] = to_string(cfg.link_state);
    j["array"] = {{"rows", cfg.array.rows}, {"cols", cfg.array.cols},
                  {"spacing_wavelengths", cfg.array.spacing_wavelengths}};
    j["ris_elements"] = cfg.ris_elements;
    j["budget"] = {{"tx_power_dbm", cfg.budget.tx_power_dbm}, {"noise_floor_dbm", cfg.budget.noise_floor_dbm}};
    j["pathloss"] = {{"direct_los", pathloss_json(cfg.pathloss.direct_los)},
                     {"direct_nlos", pathloss_json(cfg.pathloss.direct_nlos)},
                     {"tx_ris", pathloss_json(cfg.pathloss.tx_ris)},
                     {"ris_rx", pathloss_json(cfg.pathloss.ris_rx)}};
    j["csi_error"] = {{"mse_db_direct", optional_json(cfg.csi_error.mse_db_direct)},
                      {"mse_db_tx_ris", optional_json(cfg.csi_error.mse_db_tx_ris)},
                      {"mse_db_ris_rx", optional_json(cfg.csi_error.mse_db_ris_rx)}};
    j["phase_bits"] = cfg.phase_bits ? json(*cfg.phase_bits) : json(nullptr);
    j["trials"] = cfg.trials;
    j["master_seed"] = cfg.master_seed;
    j["far_field_min_m"] = cfg.far_field_min_m;
    return j;
}

ScenarioConfig scenario_from_json(const json &j, ScenarioConfig cfg)
{
    reject_unknown_keys(j, "config",
                        {"placement", "link_state", "array", "ris_elements", "budget", "pathloss", "csi_error",
                         "phase_bits", "trials", "master_seed", "far_field_min_m"});
    try
    {
        if (auto it = j.find("placement"); it != j.end())
        {
            reject_unknown_keys(*it, "placement", {"tx", "rx", "ris"});
            read_point(*it, "tx", cfg.placement.tx);
            read_point(*it, "rx", cfg.placement.rx);
            read_point(*it, "ris", cfg.placement.ris);
        }
        if (auto it = j.find("link_state"); it != j.end())
            cfg.link_state = link_state_from_string(it->get<std::string>());
        if (auto it = j.find("array"); it != j.end())
        {
            reject_unknown_keys(*it, "array", {"rows", "cols", "spacing_wavelengths"});
            read(*it, "rows", cfg.array.rows);
            read(*it, "cols", cfg.array.cols);
            read(*it, "spacing_wavelengths", cfg.array.spacing_wavelengths);
        }
        read(j, "ris_elements", cfg.ris_elements);
        if (auto it = j.find("budget"); it != j.end())
        {
            reject_unknown_keys(*it, "budget", {"tx_power_dbm", "noise_floor_dbm"});
            read(*it, "tx_power_dbm", cfg.budget.tx_power_dbm);
            read(*it, "noise_floor_dbm", cfg.budget.noise_floor_dbm);
        }
        if (auto it = j.find("pathloss"); it != j.end())
        {
            reject_unknown_keys(*it, "pathloss", {"direct_los", "direct_nlos", "tx_ris", "ris_rx"});
            read_pathloss(*it, "direct_los", cfg.pathloss.direct_los);
            read_pathloss(*it, "direct_nlos", cfg.pathloss.direct_nlos);
            read_pathloss(*it, "tx_ris", cfg.pathloss.tx_ris);
            read_pathloss(*it, "ris_rx", cfg.pathloss.ris_rx);
        }
        if (auto it = j.find("csi_error"); it != j.end())
        {
            if (it->is_null())
                cfg.csi_error = {};
            else
            {
                reject_unknown_keys(*it, "csi_error", {"mse_db_direct", "mse_db_tx_ris", "mse_db_ris_rx"});
                read_optional(*it, "mse_db_direct", cfg.csi_error.mse_db_direct);
                read_optional(*it, "mse_db_tx_ris", cfg.csi_error.mse_db_tx_ris);
                read_optional(*it, "mse_db_ris_rx", cfg.csi_error.mse_db_ris_rx);
            }
        }
        read_optional(j, "phase_bits", cfg.phase_bits);
        read(j, "trials", cfg.trials);
        read(j, "master_seed", cfg.master_seed);
        read(j, "far_field_min_m", cfg.far_field_min_m);
    }
    catch (const json::exception &e)
    {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    validate(cfg);
    return cfg;
}

ScenarioConfig load_scenario(const std::string &path, ScenarioConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path + "'");
    json j;
    try
    {
        in >> j;
    }
    catch (const json::parse_error &e)
    {
        throw std::invalid_argument("config '" + path + "': " + e.what());
    }
    return scenario_from_json(j, std::move(base));
}

} // namespace riscancel
