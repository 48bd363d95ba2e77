// SPDX-License-Identifier: Apache-2.0
//
// fr3mb - multi-band MIMO resource allocation for the upper mid-band
// Copyright (C) 2026 The fr3mb Authors
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

#include "fr3mb/report.hpp"

#include "number_format.hpp"

#include <ostream>

namespace fr3mb
{
    std::string frequency_key(double f_ghz)
    {
        return detail::format_shortest(f_ghz);
    }

    nlohmann::ordered_json allocation_json(const SeTable &table, int budget, const AvailabilityMask &mask,
                                           const AllocationResult &result)
    {
        nlohmann::ordered_json out;
        out["budget"] = budget;
        auto mask_json = nlohmann::ordered_json::object();
        auto choice_json = nlohmann::ordered_json::object();
        for (std::size_t s = 0; s < table.subband_count(); ++s)
        {
            const auto key = frequency_key(table.subband_centers_ghz()[s]);
            mask_json[key] = bool(mask[s]);
            choice_json[key] = table.ladder().label(result.choice[s]);
        }
        out["mask"] = std::move(mask_json);
        out["choice"] = std::move(choice_json);
        out["antennas_used"] = result.antennas_used;
        out["sum_se"] = result.sum_se;
        return out;
    }

    void write_sweep_csv(std::ostream &out, const SeTable &table, std::span<const int> budgets,
                         const std::vector<AllocationResult> &results)
    {
        out << "budget";
        for (double f : table.subband_centers_ghz())
            out << ',' << frequency_key(f) << "_se";
        out << ",sum_se\n";
        for (std::size_t i = 0; i < results.size(); ++i)
        {
            out << budgets[i];
            for (double v : results[i].contributions(table))
                out << ',' << detail::format_rounded(v, 3);
            out << ',' << detail::format_rounded(results[i].sum_se, 3) << '\n';
        }
    }

    void write_radar_raw_csv(std::ostream &out, const std::vector<ArchitectureMetrics> &metrics)
    {
        out << "architecture,bandwidth,se,adc_dac,subbands,frontends\n";
        for (const auto &m : metrics)
            out << m.name << ',' << detail::format_shortest(m.total_bandwidth_ghz) << ','
                << detail::format_rounded(m.sum_se, 3) << ',' << m.adc_dac_count << ',' << m.subbands_accessible << ','
                << m.rf_frontend_count << '\n';
    }

    void write_radar_normalized_csv(std::ostream &out, const std::vector<ArchitectureMetrics> &metrics)
    {
        auto coords = radar_coordinates(metrics);
        out << "architecture,bandwidth,se,adc_dac,subbands,frontends\n";
        for (std::size_t i = 0; i < metrics.size(); ++i)
        {
            out << metrics[i].name;
            for (double v : coords[i])
                out << ',' << detail::format_rounded(v, 6);
            out << '\n';
        }
    }
}
