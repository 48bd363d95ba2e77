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

#ifndef FR3MB_CORE_MODEL_HPP
#define FR3MB_CORE_MODEL_HPP

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fr3mb
{
    /// Raised for malformed hardware or plan configurations (as opposed to
    /// configurations that are well formed but violate a hardware limit).
    class ConfigurationError : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class UnknownSubbandError : public ConfigurationError
    {
    public:
        UnknownSubbandError(int frontend_set_id, int subband_id);
        int subband_id() const noexcept { return subband_id_; }

    private:
        int subband_id_;
    };

    // ---------------------------------------------------------------------
    // Spectrum

    struct Subband
    {
        int id = 0;
        double f_low_ghz = 0.0;
        double f_high_ghz = 0.0;
        double f_center_ghz = 0.0;

        double width_ghz() const { return f_high_ghz - f_low_ghz; }

        // Throws std::invalid_argument unless 0 < f_low <= f_center <= f_high.
        // The center defaults to the midpoint.
        static Subband make(int id, double f_low_ghz, double f_high_ghz,
                            std::optional<double> f_center_ghz = std::nullopt);
    };

    class SubbandPlan
    {
    public:
        static constexpr double kDefaultMinGhz = 7.0;
        static constexpr double kDefaultMaxGhz = 24.0;

        // Subbands are sorted by f_low; overlap, duplicate ids and bands
        // outside [min_ghz, max_ghz] are rejected.
        explicit SubbandPlan(std::vector<Subband> subbands,
                             double min_ghz = kDefaultMinGhz,
                             double max_ghz = kDefaultMaxGhz);

        /// Plan with one subband per center frequency, `center ± half_width`,
        /// clipped to the range limits. Ids are 0..n-1 in ascending frequency.
        static SubbandPlan from_centers(std::span<const double> centers_ghz,
                                        double half_width_ghz = 0.5,
                                        double min_ghz = kDefaultMinGhz,
                                        double max_ghz = kDefaultMaxGhz);

        /// Five subbands centred at 7, 10, 14, 20 and 24 GHz.
        static SubbandPlan default_fr3(double half_width_ghz = 0.5);

        const std::vector<Subband> &subbands() const { return subbands_; }
        std::size_t size() const { return subbands_.size(); }
        const Subband &operator[](std::size_t index) const { return subbands_[index]; }
        double min_ghz() const { return min_ghz_; }
        double max_ghz() const { return max_ghz_; }

        std::optional<std::size_t> index_of(int subband_id) const;
        std::vector<double> centers_ghz() const;

    private:
        std::vector<Subband> subbands_;
        double min_ghz_;
        double max_ghz_;
    };

    // ---------------------------------------------------------------------
    // Hardware

    struct FrontendSet
    {
        static constexpr double kDefaultMaxFractionalBandwidth = 0.29;

        int id = 0;
        int antenna_count = 0;
        std::vector<int> covered_subband_ids;
        double max_fbw = kDefaultMaxFractionalBandwidth;

        bool covers(int subband_id) const;
    };

    /// (f_max - f_min) / f_mid with f_mid the arithmetic midpoint.
    double fractional_bandwidth(double f_min_ghz, double f_max_ghz);

    enum class FrontendRule
    {
        EmptyCoverage,
        NonPositiveAntennaCount,
        NonContiguous,
        FractionalBandwidth
    };

    struct FrontendViolation
    {
        FrontendRule rule;
        std::string message;
    };

    struct FrontendValidation
    {
        std::vector<FrontendViolation> violations;
        double fractional_bandwidth = 0.0;

        bool ok() const { return violations.empty(); }
    };

    // Throws UnknownSubbandError when a covered id is not in the plan.
    FrontendValidation validate_frontend_set(const FrontendSet &set, const SubbandPlan &plan);

    enum class ArchitectureClass
    {
        FrequencyPartitioned,
        FrequencyIntegrated,
        FrequencyAdaptive,
        AllAntennas
    };

    std::string to_string(ArchitectureClass cls);

    struct ArchitectureSpec
    {
        ArchitectureClass cls = ArchitectureClass::FrequencyAdaptive;
        std::vector<FrontendSet> frontend_sets;
        int converter_budget = 0;

        // subband id -> dedicated converters (FrequencyIntegrated only)
        std::optional<std::vector<std::pair<int, int>>> per_subband_converters;

        // converter index -> reachable frontend-set ids; nullopt is a full crossbar
        std::optional<std::vector<std::vector<int>>> switching;

        int total_antennas() const;
        int rf_frontend_count() const { return total_antennas(); }

        // Antennas in frontend sets covering the subband, regardless of switching.
        int antennas_in_subband(int subband_id) const;

        // Antennas in the subband that at least one converter can reach,
        // capped by the number of converters reaching them.
        int reachable_in_subband(int subband_id) const;

        int dedicated_converters(int subband_id) const;
    };

    // Checks the class-specific converter accounting and every frontend set.
    // Throws ConfigurationError describing the first failure.
    void validate_architecture(const ArchitectureSpec &spec, const SubbandPlan &plan);

    // ---------------------------------------------------------------------
    // Spectral efficiency tables

    class SizeLadder
    {
    public:
        struct Option
        {
            int cost = 0;
            std::string label;
            bool operator==(const Option &) const = default;
        };

        // Costs must start at 0 and increase strictly.
        explicit SizeLadder(std::vector<Option> options);

        /// Options 0, 1x1, ..., n x n with cost n.
        static SizeLadder linear(int max_n);
        /// Options 0, 1x1, ..., k x k with cost k^2 (square arrays).
        static SizeLadder square(int max_k);
        /// Labels inferred from the cost sequence (see README, table format).
        static SizeLadder from_costs(std::span<const int> costs);

        const std::vector<Option> &options() const { return options_; }
        std::size_t size() const { return options_.size(); }
        int cost(std::size_t option) const { return options_[option].cost; }
        const std::string &label(std::size_t option) const { return options_[option].label; }

        // Largest option whose cost does not exceed `limit`.
        std::size_t largest_within(int limit) const;

        bool operator==(const SizeLadder &) const = default;

    private:
        std::vector<Option> options_;
    };

    class SeTable
    {
    public:
        // values: rows = ladder options, cols = subbands, bits/s/Hz.
        SeTable(std::vector<double> subband_centers_ghz, SizeLadder ladder,
                Eigen::MatrixXd values, std::string provenance = {});

        const std::vector<double> &subband_centers_ghz() const { return centers_; }
        const SizeLadder &ladder() const { return ladder_; }
        const Eigen::MatrixXd &values() const { return values_; }
        const std::string &provenance() const { return provenance_; }

        std::size_t subband_count() const { return centers_.size(); }
        std::size_t option_count() const { return ladder_.size(); }
        double se(std::size_t option, std::size_t subband) const { return values_(Eigen::Index(option), Eigen::Index(subband)); }

        // Column whose center equals `f_ghz` within 1e-9 GHz.
        std::optional<std::size_t> subband_at(double f_ghz) const;

        bool operator==(const SeTable &other) const;

    private:
        std::vector<double> centers_;
        SizeLadder ladder_;
        Eigen::MatrixXd values_;
        std::string provenance_;
    };

    class AvailabilityMask
    {
    public:
        explicit AvailabilityMask(std::vector<bool> available) : available_(std::move(available)) {}

        static AvailabilityMask all(std::size_t subband_count) { return AvailabilityMask(std::vector<bool>(subband_count, true)); }
        static AvailabilityMask only(std::size_t subband_count, std::span<const std::size_t> subbands);

        bool operator[](std::size_t subband) const { return available_[subband]; }
        std::size_t size() const { return available_.size(); }
        std::size_t available_count() const;
        const std::vector<bool> &flags() const { return available_; }

        bool operator==(const AvailabilityMask &) const = default;

    private:
        std::vector<bool> available_;
    };

    /// The indoor-laboratory and outdoor urban-macro reference tables
    /// (1x1..9x9 plus the zero option at 7, 10, 14, 20 and 24 GHz).
    struct ReferenceTables
    {
        SeTable indoor;
        SeTable outdoor;
    };

    ReferenceTables builtin_reference_tables();
}

#endif
