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

#include "fr3mb/allocator.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace fr3mb
{
    namespace
    {
        struct Score
        {
            double se = 0.0;
            int antennas = 0;

            bool operator==(const Score &) const = default;
        };

        bool better(const Score &a, const Score &b)
        {
            return a.se > b.se || (a.se == b.se && a.antennas < b.antennas);
        }

        // Highest admissible option per subband (0 when masked).
        std::vector<std::size_t> option_limits(const SeTable &table, const AvailabilityMask &mask,
                                               const std::optional<std::vector<std::size_t>> &caps)
        {
            std::vector<std::size_t> limits(table.subband_count(), 0);
            for (std::size_t s = 0; s < limits.size(); ++s)
            {
                if (!mask[s])
                    continue;
                limits[s] = table.option_count() - 1;
                if (caps)
                    limits[s] = std::min(limits[s], (*caps)[s]);
            }
            return limits;
        }

        // best[s][b]: best score over subbands s..K-1 spending at most b.
        class SuffixTable
        {
        public:
            SuffixTable(const SeTable &table, std::vector<std::size_t> limits, int max_budget)
                : table_(table), limits_(std::move(limits)), width_(std::size_t(max_budget) + 1),
                  best_((table.subband_count() + 1) * width_)
            {
                const std::size_t subbands = table.subband_count();
                for (std::size_t s = subbands; s-- > 0;)
                {
                    for (std::size_t b = 0; b < width_; ++b)
                    {
                        Score top = at(s + 1, b); // option 0
                        top.se = table_.se(0, s) + top.se;
                        for (std::size_t o = 1; o <= limits_[s]; ++o)
                        {
                            auto cost = std::size_t(table_.ladder().cost(o));
                            if (cost > b)
                                break;
                            Score cand = candidate(s, o, b);
                            if (better(cand, top))
                                top = cand;
                        }
                        best_[s * width_ + b] = top;
                    }
                }
            }

            AllocationResult reconstruct(int budget) const
            {
                AllocationResult result;
                result.choice.assign(table_.subband_count(), 0);
                std::size_t b = std::size_t(budget);
                for (std::size_t s = 0; s < table_.subband_count(); ++s)
                {
                    const Score target = at(s, b);
                    for (std::size_t o = limits_[s] + 1; o-- > 0;)
                    {
                        auto cost = std::size_t(table_.ladder().cost(o));
                        if (cost <= b && candidate(s, o, b) == target)
                        {
                            result.choice[s] = o;
                            b -= cost;
                            break;
                        }
                    }
                }
                const Score total = at(0, std::size_t(budget));
                result.sum_se = total.se;
                result.antennas_used = total.antennas;
                return result;
            }

        private:
            const Score &at(std::size_t s, std::size_t b) const { return best_[s * width_ + b]; }

            Score candidate(std::size_t s, std::size_t o, std::size_t b) const
            {
                auto cost = std::size_t(table_.ladder().cost(o));
                const Score &rest = at(s + 1, b - cost);
                return {table_.se(o, s) + rest.se, int(cost) + rest.antennas};
            }

            const SeTable &table_;
            std::vector<std::size_t> limits_;
            std::size_t width_;
            std::vector<Score> best_;
        };

        void check_problem_shape(const SeTable &table, const AvailabilityMask &mask, int budget)
        {
            if (mask.size() != table.subband_count())
                throw std::invalid_argument("Availability mask does not cover the table's subbands.");
            if (budget < 0)
                throw std::invalid_argument("Antenna budget must be non-negative.");
        }

        AllocationResult evaluate_choice(const SeTable &table, std::vector<std::size_t> choice)
        {
            AllocationResult r;
            r.sum_se = ordered_sum(table, choice);
            for (std::size_t s = 0; s < choice.size(); ++s)
                r.antennas_used += table.ladder().cost(choice[s]);
            r.choice = std::move(choice);
            return r;
        }
    }

    AllocationProblem::AllocationProblem(SeTable table_, int budget_, AvailabilityMask mask_,
                                         std::optional<std::vector<std::size_t>> per_subband_cap_)
        : table(std::move(table_)), budget(budget_), mask(std::move(mask_)), per_subband_cap(std::move(per_subband_cap_))
    {
        check_problem_shape(table, mask, budget);
        if (per_subband_cap && per_subband_cap->size() != table.subband_count())
            throw std::invalid_argument("Per-subband caps do not cover the table's subbands.");
    }

    std::vector<double> AllocationResult::contributions(const SeTable &table) const
    {
        std::vector<double> out(choice.size());
        for (std::size_t s = 0; s < choice.size(); ++s)
            out[s] = table.se(choice[s], s);
        return out;
    }

    double ordered_sum(const SeTable &table, std::span<const std::size_t> choice)
    {
        double total = 0.0;
        for (std::size_t s = choice.size(); s-- > 0;)
            total = table.se(choice[s], s) + total;
        return total;
    }

    bool ranks_ahead(const AllocationResult &a, const AllocationResult &b)
    {
        if (a.sum_se != b.sum_se)
            return a.sum_se > b.sum_se;
        if (a.antennas_used != b.antennas_used)
            return a.antennas_used < b.antennas_used;
        return std::lexicographical_compare(b.choice.begin(), b.choice.end(), a.choice.begin(), a.choice.end());
    }

    AllocationResult optimize(const AllocationProblem &problem)
    {
        SuffixTable dp(problem.table, option_limits(problem.table, problem.mask, problem.per_subband_cap),
                       problem.budget);
        return dp.reconstruct(problem.budget);
    }

    // ---------------------------------------------------------------------

    OracleCapExceeded::OracleCapExceeded(double instance_size, double cap)
        : std::runtime_error([&]
                             {
                                 std::ostringstream msg;
                                 msg << "brute_force: " << instance_size << " candidate allocations exceed the cap of " << cap << ".";
                                 return msg.str(); }()),
          instance_size_(instance_size)
    {
    }

    AllocationResult brute_force(const AllocationProblem &problem, double cap)
    {
        const SeTable &table = problem.table;
        const auto limits = option_limits(table, problem.mask, problem.per_subband_cap);

        double instance_size = 1.0;
        for (auto l : limits)
            instance_size *= double(l + 1);
        if (instance_size > cap)
            throw OracleCapExceeded(instance_size, cap);

        std::vector<std::size_t> choice(limits.size(), 0);
        AllocationResult best = evaluate_choice(table, choice);

        // Mixed-radix odometer over every admissible choice vector.
        while (true)
        {
            std::size_t s = 0;
            while (s < choice.size() && choice[s] == limits[s])
                choice[s++] = 0;
            if (s == choice.size())
                break;
            ++choice[s];

            int cost = 0;
            for (std::size_t k = 0; k < choice.size(); ++k)
                cost += table.ladder().cost(choice[k]);
            if (cost > problem.budget)
                continue;

            AllocationResult cand = evaluate_choice(table, choice);
            if (ranks_ahead(cand, best))
                best = std::move(cand);
        }
        return best;
    }

    std::vector<AllocationResult> sweep(const SeTable &table, std::span<const int> budgets, const AvailabilityMask &mask)
    {
        std::vector<AllocationResult> out;
        if (budgets.empty())
            return out;
        for (std::size_t i = 0; i < budgets.size(); ++i)
        {
            check_problem_shape(table, mask, budgets[i]);
            if (i > 0 && budgets[i] < budgets[i - 1])
                throw std::invalid_argument("sweep: budgets must be ascending.");
        }

        SuffixTable dp(table, option_limits(table, mask, std::nullopt), budgets.back());
        out.reserve(budgets.size());
        for (int b : budgets)
            out.push_back(dp.reconstruct(b));
        return out;
    }

    // ---------------------------------------------------------------------

    AllocationResult repurpose(const ArchitectureSpec &spec, const SeTable &table, const AvailabilityMask &mask)
    {
        check_problem_shape(table, mask, spec.converter_budget);
        const std::size_t subbands = table.subband_count();
        const auto &ladder = table.ladder();

        for (const auto &fs : spec.frontend_sets)
            for (int id : fs.covered_subband_ids)
                if (id < 0 || std::size_t(id) >= subbands)
                    throw ConfigurationError("repurpose: frontend set " + std::to_string(fs.id) +
                                             " covers subband " + std::to_string(id) + " outside the table.");

        // Antennas the architecture can drive in each subband.
        std::vector<int> reach(subbands, 0);
        for (std::size_t s = 0; s < subbands; ++s)
        {
            int id = int(s);
            switch (spec.cls)
            {
            case ArchitectureClass::FrequencyPartitioned:
            case ArchitectureClass::FrequencyAdaptive:
                reach[s] = spec.reachable_in_subband(id);
                break;
            case ArchitectureClass::FrequencyIntegrated:
            case ArchitectureClass::AllAntennas:
                reach[s] = spec.antennas_in_subband(id);
                break;
            }
        }

        if (mask.available_count() > 0)
        {
            bool any = false;
            for (std::size_t s = 0; s < subbands; ++s)
                any = any || (mask[s] && reach[s] > 0);
            if (!any)
                throw InfeasibleArchitectureError("repurpose: " + to_string(spec.cls) +
                                                  " reaches no frontend in any available subband.");
        }

        switch (spec.cls)
        {
        case ArchitectureClass::FrequencyPartitioned:
        {
            AllocationResult best = evaluate_choice(table, std::vector<std::size_t>(subbands, 0));
            for (std::size_t s = 0; s < subbands; ++s)
            {
                if (!mask[s] || reach[s] == 0)
                    continue;
                int limit = std::min(spec.converter_budget, reach[s]);
                AllocationProblem single(table, limit, AvailabilityMask::only(subbands, std::array{s}));
                AllocationResult cand = optimize(single);
                if (ranks_ahead(cand, best))
                    best = std::move(cand);
            }
            return best;
        }
        case ArchitectureClass::FrequencyIntegrated:
        {
            std::vector<std::size_t> caps(subbands, 0);
            int total = 0;
            for (std::size_t s = 0; s < subbands; ++s)
            {
                int limit = std::min(spec.dedicated_converters(int(s)), reach[s]);
                caps[s] = ladder.largest_within(limit);
                total += ladder.cost(caps[s]);
            }
            return optimize(AllocationProblem(table, total, mask, caps));
        }
        case ArchitectureClass::FrequencyAdaptive:
        {
            std::vector<std::size_t> caps(subbands, 0);
            for (std::size_t s = 0; s < subbands; ++s)
                caps[s] = ladder.largest_within(reach[s]);
            return optimize(AllocationProblem(table, spec.converter_budget, mask, caps));
        }
        case ArchitectureClass::AllAntennas:
        {
            std::vector<std::size_t> choice(subbands, 0);
            for (std::size_t s = 0; s < subbands; ++s)
                if (mask[s])
                    choice[s] = ladder.largest_within(reach[s]);
            return evaluate_choice(table, std::move(choice));
        }
        }
        throw std::logic_error("repurpose: unknown architecture class");
    }
}
