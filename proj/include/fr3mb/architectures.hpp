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

#ifndef FR3MB_ARCHITECTURES_HPP
#define FR3MB_ARCHITECTURES_HPP

#include "fr3mb/allocator.hpp"
#include "fr3mb/core_model.hpp"

#include <array>
#include <string>
#include <vector>

namespace fr3mb
{
    struct ArchitectureMetrics
    {
        std::string name;
        double total_bandwidth_ghz = 0.0; // simultaneously usable available spectrum
        double sum_se = 0.0;
        int adc_dac_count = 0;
        int subbands_accessible = 0;
        int rf_frontend_count = 0;
        AllocationResult allocation;

        static constexpr std::size_t kAxes = 5;
        // bandwidth, SE, #ADCs/DACs, #subbands, #RF frontends
        std::array<double, kAxes> axes() const;
    };

    // Per-subband array sizes of the four reference designs.
    struct ComparisonHardware
    {
        int antennas_per_subband = 196;        // 14x14
        int shared_converters = 196;           // partitioned and adaptive pools
        int integrated_per_subband = 36;       // 6x6 with dedicated converters
    };

    /// Partitioned, integrated, adaptive (full crossbar) and all-antennas
    /// designs over a five-subband plan, one frontend set per subband.
    /// Throws ConfigurationError when the plan does not have five subbands.
    std::vector<ArchitectureSpec> reference_comparison_specs(const SubbandPlan &plan, const ComparisonHardware &hw = {});

    /// Subband ids of the plan must be 0..K-1 in table-column order.
    ArchitectureMetrics evaluate(const ArchitectureSpec &spec, const SubbandPlan &plan, const SeTable &table,
                                 const AvailabilityMask &mask);

    /// Rows: architectures; columns: axes scaled to 5 * value / max(value).
    /// An all-zero axis maps to 0. Requires at least two rows.
    std::vector<std::array<double, ArchitectureMetrics::kAxes>> radar_coordinates(
        const std::vector<ArchitectureMetrics> &metrics);

    std::vector<std::array<double, ArchitectureMetrics::kAxes>> radar_coordinates(
        const std::vector<std::array<double, ArchitectureMetrics::kAxes>> &raw);

    // Radar coordinates of the reference comparison (partitioned,
    // integrated, adaptive, all-antennas), kept as reference data. Their
    // #ADCs/DACs axis does not follow a single normalization.
    std::vector<std::array<double, ArchitectureMetrics::kAxes>> reference_radar_coordinates();
}

#endif
