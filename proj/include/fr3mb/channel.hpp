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

#ifndef FR3MB_CHANNEL_HPP
#define FR3MB_CHANNEL_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace fr3mb
{
    using ComplexMatrix = Eigen::MatrixXcd;

    constexpr double kSpeedOfLight = 299792458.0; // m/s

    struct ChannelRecord
    {
        int user_id = 0;
        double f_center_ghz = 0.0;
        ComplexMatrix matrix; // rx x tx, dimensionless amplitude gains
    };

    // Records keep insertion order. At most one record per (user, frequency);
    // records at the same frequency share dimensions.
    class ChannelSet
    {
    public:
        ChannelSet() = default;
        explicit ChannelSet(std::string scenario_label, std::uint64_t seed = 0)
            : scenario_label_(std::move(scenario_label)), seed_(seed) {}

        // Throws std::invalid_argument on an invariant violation.
        void add(ChannelRecord record);

        const std::vector<ChannelRecord> &records() const { return records_; }
        std::size_t size() const { return records_.size(); }
        const std::string &scenario_label() const { return scenario_label_; }
        std::uint64_t seed() const { return seed_; }

        // Distinct frequencies, ascending.
        std::vector<double> frequencies_ghz() const;
        // Records at the given frequency, ordered by user id.
        std::vector<const ChannelRecord *> at_frequency(double f_ghz) const;

        const ChannelRecord *find(int user_id, double f_ghz) const;

        bool operator==(const ChannelSet &other) const;

    private:
        std::vector<ChannelRecord> records_;
        std::string scenario_label_;
        std::uint64_t seed_ = 0;
    };

    enum class ScenarioKind
    {
        Indoor,
        Outdoor,
        Custom
    };

    std::string to_string(ScenarioKind kind);

    struct ScenarioConfig
    {
        ScenarioKind kind = ScenarioKind::Custom;
        int num_users = 1;
        int rx_antennas = 1;
        int tx_antennas = 1;
        std::vector<double> frequencies_ghz{7.0};
        int cluster_count = 1;
        double rician_k_db = 0.0;       // may be +/-infinity (pure LOS / pure NLOS)
        double distance_min_m = 10.0;
        double distance_max_m = 10.0;
        double angular_spread_deg = 5.0; // per-ray spread around each cluster direction
        int rays_per_cluster = 8;
        double delay_spread_ns = 30.0;   // mean cluster excess delay
        // Extra attenuation per GHz above the lowest frequency, applied to the
        // n-th strongest cluster as n * value. Concentrates power in fewer
        // clusters at higher frequencies.
        double cluster_decay_db_per_ghz = 0.0;

        // Laboratory-like preset: many clusters, weak LOS, short range.
        static ScenarioConfig indoor();
        // Urban-macro-like preset: few clusters, strong LOS, long range.
        static ScenarioConfig outdoor();

        // Throws ConfigurationError naming the offending field.
        void validate() const;
    };

    /// Free-space path loss 20 log10(4 pi d f / c) in dB.
    double fspl_db(double distance_m, double f_ghz);

    /// Linear amplitude gain implied by fspl_db.
    double free_space_amplitude(double distance_m, double f_ghz);

    /// Per-user generator seed: splitmix64 finalizer over (seed, user_id).
    std::uint64_t user_sub_seed(std::uint64_t seed, int user_id);

    /// LOS plus clustered NLOS channel per user and frequency with
    /// half-wavelength uniform linear arrays at both ends. The result depends
    /// only on (cfg, seed); the thread count changes wall time, not values.
    /// Records are ordered user-major, then by frequency.
    ChannelSet synth_generate(const ScenarioConfig &cfg, std::uint64_t seed, unsigned threads = 1);
}

#endif
