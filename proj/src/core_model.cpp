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

#include "fr3mb/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace fr3mb
{
    UnknownSubbandError::UnknownSubbandError(int frontend_set_id, int subband_id)
        : ConfigurationError("Frontend set " + std::to_string(frontend_set_id) +
                             " references unknown subband id " + std::to_string(subband_id) + "."),
          subband_id_(subband_id)
    {
    }

    Subband Subband::make(int id, double f_low_ghz, double f_high_ghz, std::optional<double> f_center_ghz)
    {
        if (!std::isfinite(f_low_ghz) || !std::isfinite(f_high_ghz) || f_low_ghz <= 0.0)
            throw std::invalid_argument("Subband " + std::to_string(id) + ": f_low must be positive and finite.");
        if (f_high_ghz < f_low_ghz)
            throw std::invalid_argument("Subband " + std::to_string(id) + ": f_high is below f_low.");

        double center = f_center_ghz.value_or(0.5 * (f_low_ghz + f_high_ghz));
        if (!(center >= f_low_ghz && center <= f_high_ghz))
            throw std::invalid_argument("Subband " + std::to_string(id) + ": center lies outside [f_low, f_high].");

        return Subband{id, f_low_ghz, f_high_ghz, center};
    }

    // ---------------------------------------------------------------------

    SubbandPlan::SubbandPlan(std::vector<Subband> subbands, double min_ghz, double max_ghz)
        : subbands_(std::move(subbands)), min_ghz_(min_ghz), max_ghz_(max_ghz)
    {
        if (!(min_ghz_ > 0.0 && max_ghz_ > min_ghz_))
            throw std::invalid_argument("SubbandPlan: invalid range limits.");
        if (subbands_.empty())
            throw std::invalid_argument("SubbandPlan: at least one subband is required.");

        std::stable_sort(subbands_.begin(), subbands_.end(),
                         [](const Subband &a, const Subband &b)
                         { return a.f_low_ghz < b.f_low_ghz; });

        std::set<int> ids;
        for (std::size_t i = 0; i < subbands_.size(); ++i)
        {
            const auto &sb = subbands_[i];
            if (!ids.insert(sb.id).second)
                throw std::invalid_argument("SubbandPlan: duplicate subband id " + std::to_string(sb.id) + ".");
            if (sb.f_low_ghz < min_ghz_ || sb.f_high_ghz > max_ghz_)
                throw std::invalid_argument("SubbandPlan: subband " + std::to_string(sb.id) + " lies outside the plan range.");
            if (i > 0 && sb.f_low_ghz < subbands_[i - 1].f_high_ghz)
                throw std::invalid_argument("SubbandPlan: subbands " + std::to_string(subbands_[i - 1].id) +
                                            " and " + std::to_string(sb.id) + " overlap.");
        }
    }

    SubbandPlan SubbandPlan::from_centers(std::span<const double> centers_ghz, double half_width_ghz,
                                          double min_ghz, double max_ghz)
    {
        if (!(half_width_ghz >= 0.0))
            throw std::invalid_argument("SubbandPlan: half width must be non-negative.");

        std::vector<double> centers(centers_ghz.begin(), centers_ghz.end());
        std::sort(centers.begin(), centers.end());

        std::vector<Subband> subbands;
        subbands.reserve(centers.size());
        for (std::size_t i = 0; i < centers.size(); ++i)
        {
            double lo = std::max(centers[i] - half_width_ghz, min_ghz);
            double hi = std::min(centers[i] + half_width_ghz, max_ghz);
            subbands.push_back(Subband::make(int(i), lo, hi, centers[i]));
        }
        return SubbandPlan(std::move(subbands), min_ghz, max_ghz);
    }

    SubbandPlan SubbandPlan::default_fr3(double half_width_ghz)
    {
        const double centers[] = {7.0, 10.0, 14.0, 20.0, 24.0};
        return from_centers(centers, half_width_ghz);
    }

    std::optional<std::size_t> SubbandPlan::index_of(int subband_id) const
    {
        for (std::size_t i = 0; i < subbands_.size(); ++i)
            if (subbands_[i].id == subband_id)
                return i;
        return std::nullopt;
    }

    std::vector<double> SubbandPlan::centers_ghz() const
    {
        std::vector<double> out;
        out.reserve(subbands_.size());
        for (const auto &sb : subbands_)
            out.push_back(sb.f_center_ghz);
        return out;
    }

    // ---------------------------------------------------------------------

    bool FrontendSet::covers(int subband_id) const
    {
        return std::find(covered_subband_ids.begin(), covered_subband_ids.end(), subband_id) !=
               covered_subband_ids.end();
    }

    double fractional_bandwidth(double f_min_ghz, double f_max_ghz)
    {
        double f_mid = 0.5 * (f_max_ghz + f_min_ghz);
        return (f_max_ghz - f_min_ghz) / f_mid;
    }

    FrontendValidation validate_frontend_set(const FrontendSet &set, const SubbandPlan &plan)
    {
        FrontendValidation result;

        std::vector<std::size_t> indices;
        for (int id : set.covered_subband_ids)
        {
            auto index = plan.index_of(id);
            if (!index)
                throw UnknownSubbandError(set.id, id);
            indices.push_back(*index);
        }

        if (set.antenna_count <= 0)
            result.violations.push_back({FrontendRule::NonPositiveAntennaCount,
                                         "antenna count must be positive, got " + std::to_string(set.antenna_count)});

        if (indices.empty())
        {
            result.violations.push_back({FrontendRule::EmptyCoverage, "frontend set covers no subband"});
            return result;
        }

        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
        if (indices.back() - indices.front() + 1 != indices.size())
            result.violations.push_back({FrontendRule::NonContiguous,
                                         "covered subbands are not contiguous in plan order"});

        double f_min = plan[indices.front()].f_low_ghz;
        double f_max = plan[indices.back()].f_high_ghz;
        result.fractional_bandwidth = fractional_bandwidth(f_min, f_max);
        if (result.fractional_bandwidth > set.max_fbw)
        {
            std::ostringstream msg;
            msg << "fractional bandwidth " << result.fractional_bandwidth << " exceeds limit " << set.max_fbw
                << " (" << f_min << "-" << f_max << " GHz)";
            result.violations.push_back({FrontendRule::FractionalBandwidth, msg.str()});
        }
        return result;
    }

    // ---------------------------------------------------------------------

    std::string to_string(ArchitectureClass cls)
    {
        switch (cls)
        {
        case ArchitectureClass::FrequencyPartitioned:
            return "frequency-partitioned";
        case ArchitectureClass::FrequencyIntegrated:
            return "frequency-integrated";
        case ArchitectureClass::FrequencyAdaptive:
            return "frequency-adaptive";
        case ArchitectureClass::AllAntennas:
            return "all-antennas";
        }
        return "unknown";
    }

    int ArchitectureSpec::total_antennas() const
    {
        int total = 0;
        for (const auto &fs : frontend_sets)
            total += fs.antenna_count;
        return total;
    }

    int ArchitectureSpec::antennas_in_subband(int subband_id) const
    {
        int total = 0;
        for (const auto &fs : frontend_sets)
            if (fs.covers(subband_id))
                total += fs.antenna_count;
        return total;
    }

    int ArchitectureSpec::reachable_in_subband(int subband_id) const
    {
        if (!switching)
            return std::min(antennas_in_subband(subband_id), converter_budget);

        std::set<int> covering;
        for (const auto &fs : frontend_sets)
            if (fs.covers(subband_id))
                covering.insert(fs.id);

        int converters = 0;
        std::set<int> reached;
        for (const auto &targets : *switching)
        {
            bool hit = false;
            for (int id : targets)
                if (covering.count(id))
                {
                    reached.insert(id);
                    hit = true;
                }
            converters += hit ? 1 : 0;
        }

        int antennas = 0;
        for (const auto &fs : frontend_sets)
            if (reached.count(fs.id))
                antennas += fs.antenna_count;
        return std::min(antennas, converters);
    }

    int ArchitectureSpec::dedicated_converters(int subband_id) const
    {
        if (!per_subband_converters)
            return 0;
        for (const auto &[id, count] : *per_subband_converters)
            if (id == subband_id)
                return count;
        return 0;
    }

    void validate_architecture(const ArchitectureSpec &spec, const SubbandPlan &plan)
    {
        const std::string name = to_string(spec.cls);
        if (spec.converter_budget < 0)
            throw ConfigurationError(name + ": converter budget must be non-negative.");

        std::set<int> set_ids;
        for (const auto &fs : spec.frontend_sets)
        {
            if (!set_ids.insert(fs.id).second)
                throw ConfigurationError(name + ": duplicate frontend set id " + std::to_string(fs.id) + ".");
            auto check = validate_frontend_set(fs, plan);
            if (!check.ok())
                throw ConfigurationError(name + ": frontend set " + std::to_string(fs.id) + ": " +
                                         check.violations.front().message + ".");
        }

        if (spec.switching)
        {
            if (int(spec.switching->size()) != spec.converter_budget)
                throw ConfigurationError(name + ": switching must list every converter.");
            for (const auto &targets : *spec.switching)
                for (int id : targets)
                    if (!set_ids.count(id))
                        throw ConfigurationError(name + ": switching references unknown frontend set " +
                                                 std::to_string(id) + ".");
        }

        switch (spec.cls)
        {
        case ArchitectureClass::FrequencyIntegrated:
        {
            if (!spec.per_subband_converters)
                throw ConfigurationError(name + ": per-subband converter counts are required.");
            int sum = 0;
            for (const auto &[id, count] : *spec.per_subband_converters)
            {
                if (!plan.index_of(id))
                    throw ConfigurationError(name + ": converter entry for unknown subband " + std::to_string(id) + ".");
                if (count < 0)
                    throw ConfigurationError(name + ": negative converter count.");
                sum += count;
            }
            if (sum != spec.converter_budget)
                throw ConfigurationError(name + ": converter budget " + std::to_string(spec.converter_budget) +
                                         " differs from the per-subband sum " + std::to_string(sum) + ".");
            break;
        }
        case ArchitectureClass::FrequencyPartitioned:
        {
            int widest = 0;
            for (const auto &sb : plan.subbands())
                widest = std::max(widest, spec.antennas_in_subband(sb.id));
            if (spec.converter_budget > widest)
                throw ConfigurationError(name + ": converter budget exceeds the antennas of any single subband.");
            break;
        }
        case ArchitectureClass::AllAntennas:
            if (spec.converter_budget != spec.total_antennas())
                throw ConfigurationError(name + ": converter budget must equal the total antenna count.");
            break;
        case ArchitectureClass::FrequencyAdaptive:
            break;
        }
    }

    // ---------------------------------------------------------------------

    SizeLadder::SizeLadder(std::vector<Option> options) : options_(std::move(options))
    {
        if (options_.empty() || options_.front().cost != 0)
            throw std::invalid_argument("SizeLadder: the first option must be the zero option (cost 0).");
        for (std::size_t i = 1; i < options_.size(); ++i)
            if (options_[i].cost <= options_[i - 1].cost)
                throw std::invalid_argument("SizeLadder: costs must increase strictly.");
    }

    SizeLadder SizeLadder::linear(int max_n)
    {
        if (max_n < 0)
            throw std::invalid_argument("SizeLadder: negative size.");
        std::vector<Option> options{{0, "0"}};
        for (int n = 1; n <= max_n; ++n)
            options.push_back({n, std::to_string(n) + "x" + std::to_string(n)});
        return SizeLadder(std::move(options));
    }

    SizeLadder SizeLadder::square(int max_k)
    {
        if (max_k < 0)
            throw std::invalid_argument("SizeLadder: negative size.");
        std::vector<Option> options{{0, "0"}};
        for (int k = 1; k <= max_k; ++k)
            options.push_back({k * k, std::to_string(k) + "x" + std::to_string(k)});
        return SizeLadder(std::move(options));
    }

    SizeLadder SizeLadder::from_costs(std::span<const int> costs)
    {
        bool linear_costs = true, square_costs = true;
        for (std::size_t i = 0; i < costs.size(); ++i)
        {
            linear_costs = linear_costs && costs[i] == int(i);
            square_costs = square_costs && costs[i] == int(i * i);
        }
        if (linear_costs)
            return linear(int(costs.size()) - 1);
        if (square_costs)
            return square(int(costs.size()) - 1);

        std::vector<Option> options;
        for (int c : costs)
            options.push_back({c, c == 0 ? "0" : std::to_string(c)});
        return SizeLadder(std::move(options));
    }

    std::size_t SizeLadder::largest_within(int limit) const
    {
        std::size_t best = 0;
        for (std::size_t i = 0; i < options_.size(); ++i)
            if (options_[i].cost <= limit)
                best = i;
        return best;
    }

    // ---------------------------------------------------------------------

    SeTable::SeTable(std::vector<double> subband_centers_ghz, SizeLadder ladder,
                     Eigen::MatrixXd values, std::string provenance)
        : centers_(std::move(subband_centers_ghz)), ladder_(std::move(ladder)),
          values_(std::move(values)), provenance_(std::move(provenance))
    {
        if (centers_.empty())
            throw std::invalid_argument("SeTable: at least one subband is required.");
        if (values_.rows() != Eigen::Index(ladder_.size()) || values_.cols() != Eigen::Index(centers_.size()))
            throw std::invalid_argument("SeTable: value matrix does not match ladder x subbands.");
        for (std::size_t i = 1; i < centers_.size(); ++i)
            if (!(centers_[i] > centers_[i - 1]))
                throw std::invalid_argument("SeTable: subband centers must increase strictly.");
        if (!values_.allFinite() || (values_.array() < 0.0).any())
            throw std::invalid_argument("SeTable: values must be finite and non-negative.");
        if ((values_.row(0).array() != 0.0).any())
            throw std::invalid_argument("SeTable: the zero option row must be identically zero.");
    }

    std::optional<std::size_t> SeTable::subband_at(double f_ghz) const
    {
        for (std::size_t i = 0; i < centers_.size(); ++i)
            if (std::abs(centers_[i] - f_ghz) < 1e-9)
                return i;
        return std::nullopt;
    }

    bool SeTable::operator==(const SeTable &other) const
    {
        return centers_ == other.centers_ && ladder_ == other.ladder_ && values_ == other.values_;
    }

    // ---------------------------------------------------------------------

    AvailabilityMask AvailabilityMask::only(std::size_t subband_count, std::span<const std::size_t> subbands)
    {
        std::vector<bool> flags(subband_count, false);
        for (std::size_t s : subbands)
        {
            if (s >= subband_count)
                throw std::out_of_range("AvailabilityMask: subband index out of range.");
            flags[s] = true;
        }
        return AvailabilityMask(std::move(flags));
    }

    std::size_t AvailabilityMask::available_count() const
    {
        return std::size_t(std::count(available_.begin(), available_.end(), true));
    }
}
