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

#ifndef FR3MB_REPORT_HPP
#define FR3MB_REPORT_HPP

#include "fr3mb/allocator.hpp"
#include "fr3mb/architectures.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fr3mb
{
    // {"budget", "mask": {freq: bool}, "choice": {freq: label}, "antennas_used", "sum_se"}
    // Frequency keys use the shortest decimal form of the subband center ("7", "13.5").
    nlohmann::ordered_json allocation_json(const SeTable &table, int budget, const AvailabilityMask &mask,
                                           const AllocationResult &result);

    // budget,<f1>_se,...,<fK>_se,sum_se
    void write_sweep_csv(std::ostream &out, const SeTable &table, std::span<const int> budgets,
                         const std::vector<AllocationResult> &results);

    // architecture,bandwidth,se,adc_dac,subbands,frontends
    void write_radar_raw_csv(std::ostream &out, const std::vector<ArchitectureMetrics> &metrics);
    void write_radar_normalized_csv(std::ostream &out, const std::vector<ArchitectureMetrics> &metrics);

    std::string frequency_key(double f_ghz);
}

#endif
