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

#include "riscancel/results_io.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <tuple>

namespace riscancel {

std::string format_csv(const ResultTable &table)
{
    if (table.rows.empty())
        throw std::invalid_argument("format_csv: empty table");

    std::vector<const ResultRow *> rows;
    rows.reserve(table.rows.size());
    for (const ResultRow &row : table.rows)
        rows.push_back(&row);
    std::stable_sort(rows.begin(), rows.end(), [](const ResultRow *l, const ResultRow *r) {
        return std::make_tuple(l->sweep_value, arm_name(l->stats.arm), std::string_view(l->experiment)) <
               std::make_tuple(r->sweep_value, arm_name(r->stats.arm), std::string_view(r->experiment));
    });

    std::string out = kCsvHeader;
    out += '\n';
    for (const ResultRow *row : rows)
    {
        fmt::format_to(std::back_inserter(out), "{},{},{},{},{},{:.6f},{:.6f},{:.6f},{}\n", row->experiment,
                       row->sweep_param, row->sweep_value, arm_name(row->stats.arm), row->stats.n,
                       row->stats.mean_snr_db, row->stats.env_low_db, row->stats.env_high_db,
                       table.config.master_seed);
    }
    return out;
}

WrittenFiles write_results(const ResultTable &table, const std::filesystem::path &out_dir)
{
    const std::string csv = format_csv(table);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec)
        throw std::runtime_error("cannot create output directory '" + out_dir.string() + "': " + ec.message());

    WrittenFiles files{out_dir / (table.name + ".csv"), out_dir / (table.name + ".config.json")};
    auto write = [](const std::filesystem::path &path, const std::string &text) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write '" + path.string() + "'");
        out << text;
        if (!out.flush())
            throw std::runtime_error("failed writing '" + path.string() + "'");
    };
    write(files.csv, csv);
    write(files.config_json, to_json(table.config).dump(2) + "\n");
    return files;
}

} // namespace riscancel
