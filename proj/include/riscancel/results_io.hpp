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

#include "riscancel/sweeps.hpp"

#include <filesystem>
#include <string>

namespace riscancel {

inline constexpr const char *kCsvHeader =
    "experiment,sweep_param,sweep_value,arm,trials,mean_snr_db,env_low_db,env_high_db,master_seed";

/// CSV text of the table, rows sorted by (sweep_value, arm, experiment).
std::string format_csv(const ResultTable &table);

struct WrittenFiles
{
    std::filesystem::path csv;
    std::filesystem::path config_json;
};

/// Writes <out_dir>/<name>.csv and <out_dir>/<name>.config.json. Creates out_dir
/// when missing; throws std::runtime_error if it cannot be written.
WrittenFiles write_results(const ResultTable &table, const std::filesystem::path &out_dir);

} // namespace riscancel
