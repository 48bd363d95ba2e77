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

#ifndef FR3MB_ALLOCATOR_HPP
#define FR3MB_ALLOCATOR_HPP

#include "fr3mb/core_model.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace fr3mb
{
    // Distribute an antenna budget (cost at the variable end) over the
    // subbands of an SeTable: one option group per available subband,
    // maximize the sum of per-subband spectral efficiencies.
    //
    // Subband ids are table column indices throughout this module.
    //
    // Ties between optimal allocations are broken by fewer antennas, then by
    // the lexicographically larger choice vector in ascending frequency order.
    // Sums are accumulated from the highest subband down, identically in the
    // solver and in the exhaustive oracle, so both agree bit for bit.

    struct AllocationProblem
    {
        SeTable table;
        int budget = 0;
        AvailabilityMask mask;
        // Per subband: highest permitted ladder option.
        std::optional<std::vector<std::size_t>> per_subband_cap;

        AllocationProblem(SeTable table, int budget, AvailabilityMask mask,
                          std::optional<std::vector<std::size_t>> per_subband_cap = std::nullopt);
    };

    struct AllocationResult
    {
        std::vector<std::size_t> choice; // ladder option per subband; 0 = unused
        double sum_se = 0.0;
        int antennas_used = 0;

        // Per-subband SE contributions, for stacked plots.
        std::vector<double> contributions(const SeTable &table) const;

        bool operator==(const AllocationResult &) const = default;
    };

    /// Highest-subband-first accumulation of table[choice[s]][s].
    double ordered_sum(const SeTable &table, std::span<const std::size_t> choice);

    /// True when a ranks strictly ahead of b under the optimality order.
    bool ranks_ahead(const AllocationResult &a, const AllocationResult &b);

    /// Exact dynamic program over (subband, remaining budget).
    AllocationResult optimize(const AllocationProblem &problem);

    class OracleCapExceeded : public std::runtime_error
    {
    public:
        OracleCapExceeded(double instance_size, double cap);
        double instance_size() const noexcept { return instance_size_; }

    private:
        double instance_size_;
    };

    constexpr double kDefaultOracleCap = 1e8;

    /// Exhaustive enumeration; refuses instances whose number of candidate
    /// allocations exceeds `cap`.
    AllocationResult brute_force(const AllocationProblem &problem, double cap = kDefaultOracleCap);

    /// One optimize result per budget (budgets ascending). A single dynamic
    /// program sized for the largest budget serves every entry.
    std::vector<AllocationResult> sweep(const SeTable &table, std::span<const int> budgets, const AvailabilityMask &mask);

    class InfeasibleArchitectureError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// Best allocation the architecture can realize on the available subbands:
    ///  - partitioned: a single subband, cost <= min(converters, reachable antennas);
    ///  - integrated: per subband, cost <= its dedicated converters and antennas;
    ///    masked subbands strand their converters;
    ///  - adaptive: total cost <= converter budget, per-subband cost <= reachable antennas;
    ///  - all antennas: every available subband runs its full antenna count
    ///    (largest ladder option not exceeding it).
    AllocationResult repurpose(const ArchitectureSpec &spec, const SeTable &table, const AvailabilityMask &mask);
}

#endif
