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

#include "fr3mb/channel.hpp"
#include "fr3mb/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace fr3mb
{
    namespace
    {
        constexpr double kPi = std::numbers::pi;
        constexpr double kDeg = kPi / 180.0;

        bool same_frequency(double a, double b) { return std::abs(a - b) < 1e-9; }

        // Explicit conversions from raw 64-bit draws so the stream does not
        // depend on the standard library's distribution implementations.
        class Draws
        {
        public:
            explicit Draws(std::uint64_t seed) : engine_(seed) {}

            double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }
            double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

            // Standard normal via Box-Muller; the second variate is cached.
            double normal()
            {
                if (has_spare_)
                {
                    has_spare_ = false;
                    return spare_;
                }
                double u1 = 0.0;
                while (u1 <= 0.0)
                    u1 = uniform();
                double u2 = uniform();
                double r = std::sqrt(-2.0 * std::log(u1));
                spare_ = r * std::sin(2.0 * kPi * u2);
                has_spare_ = true;
                return r * std::cos(2.0 * kPi * u2);
            }

            // Circularly-symmetric complex Gaussian with E|z|^2 = variance.
            std::complex<double> complex_gaussian(double variance)
            {
                double s = std::sqrt(0.5 * variance);
                double re = normal();
                double im = normal();
                return {s * re, s * im};
            }

            double exponential() { return -std::log1p(-uniform()); }

        private:
            std::mt19937_64 engine_;
            double spare_ = 0.0;
            bool has_spare_ = false;
        };

        struct Ray
        {
            double aoa_rad;
            double aod_rad;
            double delay_ns;
            std::complex<double> gain;
        };

        struct Cluster
        {
            double weight; // relative power at the reference frequency
            std::vector<Ray> rays;
        };

        struct UserGeometry
        {
            double distance_m;
            double los_aoa_rad;
            double los_aod_rad;
            std::vector<Cluster> clusters; // strongest first
        };

        UserGeometry draw_geometry(const ScenarioConfig &cfg, Draws &rng)
        {
            UserGeometry g;
            g.distance_m = rng.uniform(cfg.distance_min_m, cfg.distance_max_m);
            g.los_aoa_rad = rng.uniform(-60.0, 60.0) * kDeg;
            g.los_aod_rad = rng.uniform(-60.0, 60.0) * kDeg;

            g.clusters.resize(std::size_t(cfg.cluster_count));
            const double ray_var = 1.0 / double(cfg.rays_per_cluster);
            for (auto &cl : g.clusters)
            {
                cl.weight = rng.exponential();
                double aoa = rng.uniform(-90.0, 90.0);
                double aod = rng.uniform(-90.0, 90.0);
                double delay = cfg.delay_spread_ns * rng.exponential();
                cl.rays.resize(std::size_t(cfg.rays_per_cluster));
                for (auto &ray : cl.rays)
                {
                    ray.aoa_rad = (aoa + cfg.angular_spread_deg * rng.normal()) * kDeg;
                    ray.aod_rad = (aod + cfg.angular_spread_deg * rng.normal()) * kDeg;
                    ray.delay_ns = delay + rng.uniform(0.0, 5.0);
                    ray.gain = rng.complex_gaussian(ray_var);
                }
            }
            std::stable_sort(g.clusters.begin(), g.clusters.end(),
                             [](const Cluster &a, const Cluster &b)
                             { return a.weight > b.weight; });
            return g;
        }

        Eigen::VectorXcd ula_response(int elements, double angle_rad)
        {
            Eigen::VectorXcd a(elements);
            const double phase_step = kPi * std::sin(angle_rad);
            for (int m = 0; m < elements; ++m)
                a(m) = std::polar(1.0, phase_step * double(m));
            return a;
        }

        ComplexMatrix realize(const ScenarioConfig &cfg, const UserGeometry &g, double f_ghz, double f_ref_ghz)
        {
            const double path_gain = std::pow(free_space_amplitude(g.distance_m, f_ghz), 2);

            double los_power = 0.0, nlos_power = path_gain;
            if (std::isinf(cfg.rician_k_db) && cfg.rician_k_db > 0.0)
                los_power = path_gain, nlos_power = 0.0;
            else if (!std::isinf(cfg.rician_k_db))
            {
                double k = std::pow(10.0, cfg.rician_k_db / 10.0);
                los_power = path_gain * k / (k + 1.0);
                nlos_power = path_gain / (k + 1.0);
            }

            ComplexMatrix h = ComplexMatrix::Zero(cfg.rx_antennas, cfg.tx_antennas);

            if (los_power > 0.0)
            {
                // carrier phase over the direct path: 2 pi d / lambda
                double phase = -2.0 * kPi * g.distance_m * f_ghz * 1e9 / kSpeedOfLight;
                h += std::polar(std::sqrt(los_power), std::fmod(phase, 2.0 * kPi)) *
                     ula_response(cfg.rx_antennas, g.los_aoa_rad) *
                     ula_response(cfg.tx_antennas, g.los_aod_rad).adjoint();
            }

            if (nlos_power > 0.0)
            {
                std::vector<double> weights;
                double total = 0.0;
                for (std::size_t c = 0; c < g.clusters.size(); ++c)
                {
                    double excess_db = cfg.cluster_decay_db_per_ghz * double(c) * (f_ghz - f_ref_ghz);
                    weights.push_back(g.clusters[c].weight * std::pow(10.0, -excess_db / 10.0));
                    total += weights.back();
                }

                for (std::size_t c = 0; c < g.clusters.size(); ++c)
                {
                    double amplitude = std::sqrt(nlos_power * weights[c] / total);
                    for (const auto &ray : g.clusters[c].rays)
                    {
                        double phase = -2.0 * kPi * std::fmod(f_ghz * ray.delay_ns, 1.0);
                        h += (amplitude * ray.gain * std::polar(1.0, phase)) *
                             ula_response(cfg.rx_antennas, ray.aoa_rad) *
                             ula_response(cfg.tx_antennas, ray.aod_rad).adjoint();
                    }
                }
            }
            return h;
        }

        void require(bool condition, const std::string &field, const std::string &what)
        {
            if (!condition)
                throw ConfigurationError("Scenario field '" + field + "': " + what);
        }
    }

    // ---------------------------------------------------------------------

    void ChannelSet::add(ChannelRecord record)
    {
        const auto &m = record.matrix;
        if (m.rows() < 1 || m.cols() < 1)
            throw std::invalid_argument("ChannelSet: matrix must be at least 1x1.");
        if (!m.allFinite())
            throw std::invalid_argument("ChannelSet: non-finite entry for user " + std::to_string(record.user_id) + ".");
        for (const auto &r : records_)
        {
            if (!same_frequency(r.f_center_ghz, record.f_center_ghz))
                continue;
            if (r.user_id == record.user_id)
                throw std::invalid_argument("ChannelSet: duplicate record for user " + std::to_string(record.user_id) + ".");
            if (r.matrix.rows() != m.rows() || r.matrix.cols() != m.cols())
                throw std::invalid_argument("ChannelSet: dimension mismatch within a frequency.");
        }
        records_.push_back(std::move(record));
    }

    std::vector<double> ChannelSet::frequencies_ghz() const
    {
        std::vector<double> out;
        for (const auto &r : records_)
            if (std::none_of(out.begin(), out.end(), [&](double f)
                             { return same_frequency(f, r.f_center_ghz); }))
                out.push_back(r.f_center_ghz);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<const ChannelRecord *> ChannelSet::at_frequency(double f_ghz) const
    {
        std::vector<const ChannelRecord *> out;
        for (const auto &r : records_)
            if (same_frequency(r.f_center_ghz, f_ghz))
                out.push_back(&r);
        std::stable_sort(out.begin(), out.end(), [](auto *a, auto *b)
                         { return a->user_id < b->user_id; });
        return out;
    }

    const ChannelRecord *ChannelSet::find(int user_id, double f_ghz) const
    {
        for (const auto &r : records_)
            if (r.user_id == user_id && same_frequency(r.f_center_ghz, f_ghz))
                return &r;
        return nullptr;
    }

    bool ChannelSet::operator==(const ChannelSet &other) const
    {
        if (records_.size() != other.records_.size())
            return false;
        for (std::size_t i = 0; i < records_.size(); ++i)
        {
            const auto &a = records_[i];
            const auto &b = other.records_[i];
            if (a.user_id != b.user_id || a.f_center_ghz != b.f_center_ghz ||
                a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols() || a.matrix != b.matrix)
                return false;
        }
        return true;
    }

    // ---------------------------------------------------------------------

    std::string to_string(ScenarioKind kind)
    {
        switch (kind)
        {
        case ScenarioKind::Indoor:
            return "indoor";
        case ScenarioKind::Outdoor:
            return "outdoor";
        case ScenarioKind::Custom:
            return "custom";
        }
        return "custom";
    }

    ScenarioConfig ScenarioConfig::indoor()
    {
        ScenarioConfig cfg;
        cfg.kind = ScenarioKind::Indoor;
        cfg.num_users = 100;
        cfg.rx_antennas = 9;
        cfg.tx_antennas = 9;
        cfg.frequencies_ghz = {7.0, 10.0, 14.0, 20.0, 24.0};
        cfg.cluster_count = 12;
        cfg.rician_k_db = 0.0;
        cfg.distance_min_m = 3.0;
        cfg.distance_max_m = 30.0;
        cfg.angular_spread_deg = 8.0;
        cfg.delay_spread_ns = 20.0;
        cfg.cluster_decay_db_per_ghz = 0.3;
        return cfg;
    }

    ScenarioConfig ScenarioConfig::outdoor()
    {
        ScenarioConfig cfg;
        cfg.kind = ScenarioKind::Outdoor;
        cfg.num_users = 20;
        cfg.rx_antennas = 9;
        cfg.tx_antennas = 9;
        cfg.frequencies_ghz = {7.0, 10.0, 14.0, 20.0, 24.0};
        cfg.cluster_count = 4;
        cfg.rician_k_db = 9.0;
        cfg.distance_min_m = 50.0;
        cfg.distance_max_m = 400.0;
        cfg.angular_spread_deg = 3.0;
        cfg.delay_spread_ns = 200.0;
        cfg.cluster_decay_db_per_ghz = 0.1;
        return cfg;
    }

    void ScenarioConfig::validate() const
    {
        require(num_users > 0, "num_users", "must be positive");
        require(rx_antennas > 0, "rx_antennas", "must be positive");
        require(tx_antennas > 0, "tx_antennas", "must be positive");
        require(!frequencies_ghz.empty(), "frequencies", "at least one frequency is required");
        for (std::size_t i = 0; i < frequencies_ghz.size(); ++i)
        {
            require(std::isfinite(frequencies_ghz[i]) && frequencies_ghz[i] > 0.0, "frequencies", "must be positive");
            for (std::size_t j = 0; j < i; ++j)
                require(!same_frequency(frequencies_ghz[i], frequencies_ghz[j]), "frequencies", "duplicate frequency");
        }
        require(cluster_count >= 1, "cluster_count", "must be at least 1");
        require(!std::isnan(rician_k_db), "rician_k_db", "must not be NaN");
        require(std::isfinite(distance_min_m) && distance_min_m > 0.0, "distance_range_m", "minimum must be positive");
        require(std::isfinite(distance_max_m) && distance_max_m >= distance_min_m, "distance_range_m",
                "maximum must not be below the minimum");
        require(std::isfinite(angular_spread_deg) && angular_spread_deg >= 0.0, "angular_spread_deg", "must be non-negative");
        require(rays_per_cluster >= 1, "rays_per_cluster", "must be at least 1");
        require(std::isfinite(delay_spread_ns) && delay_spread_ns >= 0.0, "delay_spread_ns", "must be non-negative");
        require(std::isfinite(cluster_decay_db_per_ghz) && cluster_decay_db_per_ghz >= 0.0, "cluster_decay_db_per_ghz",
                "must be non-negative");
    }

    // ---------------------------------------------------------------------

    double fspl_db(double distance_m, double f_ghz)
    {
        if (!(distance_m > 0.0) || !(f_ghz > 0.0) || !std::isfinite(distance_m) || !std::isfinite(f_ghz))
            throw std::domain_error("fspl_db: distance and frequency must be positive and finite.");
        // Sum of logs keeps the octave and doubling laws exact to rounding.
        return 20.0 * std::log10(4.0 * kPi / kSpeedOfLight) + 20.0 * std::log10(distance_m) +
               20.0 * std::log10(f_ghz * 1e9);
    }

    double free_space_amplitude(double distance_m, double f_ghz)
    {
        return std::pow(10.0, -fspl_db(distance_m, f_ghz) / 20.0);
    }

    std::uint64_t user_sub_seed(std::uint64_t seed, int user_id)
    {
        auto mix = [](std::uint64_t z)
        {
            z += 0x9e3779b97f4a7c15ULL;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            return z ^ (z >> 31);
        };
        return mix(seed ^ mix(std::uint64_t(std::int64_t(user_id))));
    }

    ChannelSet synth_generate(const ScenarioConfig &cfg, std::uint64_t seed, unsigned threads)
    {
        cfg.validate();

        const double f_ref = *std::min_element(cfg.frequencies_ghz.begin(), cfg.frequencies_ghz.end());
        const std::size_t users = std::size_t(cfg.num_users);
        std::vector<std::vector<ChannelRecord>> per_user(users);

        auto work = [&](std::size_t first, std::size_t stride)
        {
            for (std::size_t u = first; u < users; u += stride)
            {
                Draws rng(user_sub_seed(seed, int(u)));
                UserGeometry geometry = draw_geometry(cfg, rng);
                for (double f : cfg.frequencies_ghz)
                    per_user[u].push_back({int(u), f, realize(cfg, geometry, f, f_ref)});
            }
        };

        threads = std::max(1u, std::min<unsigned>(threads, unsigned(users)));
        if (threads == 1)
            work(0, 1);
        else
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back(work, std::size_t(t), std::size_t(threads));
        }

        ChannelSet set(to_string(cfg.kind), seed);
        for (auto &records : per_user)
            for (auto &r : records)
                set.add(std::move(r));
        return set;
    }
}
