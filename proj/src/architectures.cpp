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

#include "fr3mb/architectures.hpp"

#include <algorithm>

namespace fr3mb
{
    std::array<double, ArchitectureMetrics::kAxes> ArchitectureMetrics::axes() const
    {
        return {total_bandwidth_ghz, sum_se, double(adc_dac_count), double(subbands_accessible),
                double(rf_frontend_count)};
    }

    std::vector<ArchitectureSpec> reference_comparison_specs(const SubbandPlan &plan, const ComparisonHardware &hw)
    {
        if (plan.size() != 5)
            throw ConfigurationError("reference_comparison_specs: the reference designs need a five-subband plan, got " +
                                     std::to_string(plan.size()) + ".");

        auto one_set_per_subband = [&](int antennas)
        {
            std::vector<FrontendSet> sets;
            for (const auto &sb : plan.subbands())
                sets.push_back(FrontendSet{sb.id, antennas, {sb.id}});
            return sets;
        };

        ArchitectureSpec partitioned;
        partitioned.cls = ArchitectureClass::FrequencyPartitioned;
        partitioned.frontend_sets = one_set_per_subband(hw.antennas_per_subband);
        partitioned.converter_budget = hw.shared_converters;

        ArchitectureSpec integrated;
        integrated.cls = ArchitectureClass::FrequencyIntegrated;
        integrated.frontend_sets = one_set_per_subband(hw.integrated_per_subband);
        integrated.per_subband_converters.emplace();
        for (const auto &sb : plan.subbands())
            integrated.per_subband_converters->emplace_back(sb.id, hw.integrated_per_subband);
        integrated.converter_budget = hw.integrated_per_subband * int(plan.size());

        ArchitectureSpec adaptive;
        adaptive.cls = ArchitectureClass::FrequencyAdaptive;
        adaptive.frontend_sets = one_set_per_subband(hw.antennas_per_subband);
        adaptive.converter_budget = hw.shared_converters;

        ArchitectureSpec all;
        all.cls = ArchitectureClass::AllAntennas;
        all.frontend_sets = one_set_per_subband(hw.antennas_per_subband);
        all.converter_budget = all.total_antennas();

        std::vector<ArchitectureSpec> specs{partitioned, integrated, adaptive, all};
        for (const auto &spec : specs)
            validate_architecture(spec, plan);
        return specs;
    }

    ArchitectureMetrics evaluate(const ArchitectureSpec &spec, const SubbandPlan &plan, const SeTable &table,
                                 const AvailabilityMask &mask)
    {
        if (plan.size() != table.subband_count() || mask.size() != plan.size())
            throw std::invalid_argument("evaluate: plan, table and mask must cover the same subbands.");
        for (std::size_t s = 0; s < plan.size(); ++s)
            if (plan[s].id != int(s))
                throw std::invalid_argument("evaluate: plan subband ids must be 0..K-1 in frequency order.");

        ArchitectureMetrics m;
        m.name = to_string(spec.cls);
        m.allocation = repurpose(spec, table, mask);
        m.sum_se = m.allocation.sum_se;
        m.adc_dac_count = spec.converter_budget;
        m.rf_frontend_count = spec.rf_frontend_count();

        // Available subbands with hardware that can serve them.
        std::vector<std::size_t> usable;
        for (std::size_t s = 0; s < plan.size(); ++s)
        {
            if (!mask[s])
                continue;
            int id = int(s);
            bool served = false;
            switch (spec.cls)
            {
            case ArchitectureClass::FrequencyPartitioned:
            case ArchitectureClass::FrequencyAdaptive:
                served = spec.reachable_in_subband(id) > 0;
                break;
            case ArchitectureClass::FrequencyIntegrated:
                served = std::min(spec.dedicated_converters(id), spec.antennas_in_subband(id)) > 0;
                break;
            case ArchitectureClass::AllAntennas:
                served = spec.antennas_in_subband(id) > 0;
                break;
            }
            if (served)
                usable.push_back(s);
        }

        if (spec.cls == ArchitectureClass::FrequencyPartitioned)
        {
            // One subband at a time: the one the allocation uses, else the first usable one.
            auto active = std::find_if(m.allocation.choice.begin(), m.allocation.choice.end(),
                                       [](std::size_t o)
                                       { return o != 0; });
            if (active != m.allocation.choice.end())
                usable = {std::size_t(active - m.allocation.choice.begin())};
            else if (!usable.empty())
                usable.resize(1);
        }

        m.subbands_accessible = int(usable.size());
        for (std::size_t s : usable)
            m.total_bandwidth_ghz += plan[s].width_ghz();
        return m;
    }

    std::vector<std::array<double, ArchitectureMetrics::kAxes>> radar_coordinates(
        const std::vector<std::array<double, ArchitectureMetrics::kAxes>> &raw)
    {
        if (raw.size() < 2)
            throw std::invalid_argument("radar_coordinates: at least two architectures are required.");

        std::vector<std::array<double, ArchitectureMetrics::kAxes>> out(raw.size());
        for (std::size_t axis = 0; axis < ArchitectureMetrics::kAxes; ++axis)
        {
            double top = 0.0;
            for (const auto &row : raw)
                top = std::max(top, row[axis]);
            for (std::size_t i = 0; i < raw.size(); ++i)
                out[i][axis] = top > 0.0 ? 5.0 * raw[i][axis] / top : 0.0;
        }
        return out;
    }

    std::vector<std::array<double, ArchitectureMetrics::kAxes>> radar_coordinates(
        const std::vector<ArchitectureMetrics> &metrics)
    {
        std::vector<std::array<double, ArchitectureMetrics::kAxes>> raw;
        for (const auto &m : metrics)
            raw.push_back(m.axes());
        return radar_coordinates(raw);
    }

    std::vector<std::array<double, ArchitectureMetrics::kAxes>> reference_radar_coordinates()
    {
        return {
            {2.5, 2.518213, 2.5, 2.5, 5.0},
            {5.0, 3.68886, 0.918367, 5.0, 0.918367},
            {5.0, 4.36629, 2.29592, 5.0, 5.0},
            {5.0, 5.0, 5.0, 5.0, 5.0},
        };
    }
}
