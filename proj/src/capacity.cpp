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

#include "fr3mb/capacity.hpp"

#include "number_format.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <thread>

namespace fr3mb
{
    namespace
    {
        constexpr double kMinReciprocalCondition = 1e-12;

        double se_from_singular_values(const ComplexMatrix &h, double rho)
        {
            Eigen::BDCSVD<ComplexMatrix> svd(h);
            double bits = 0.0;
            for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            {
                double s = svd.singularValues()(i);
                bits += std::log1p(rho * s * s);
            }
            return bits / std::log(2.0);
        }
    }

    SnrConfig::SnrConfig(double rho_per_antenna) : rho_(rho_per_antenna)
    {
        if (!(rho_ > 0.0) || !std::isfinite(rho_))
            throw std::invalid_argument("SnrConfig: rho must be positive and finite.");
    }

    SnrConfig SnrConfig::from_db(double snr_db)
    {
        return SnrConfig(std::pow(10.0, snr_db / 10.0));
    }

    double mimo_se(const ComplexMatrix &h, const SnrConfig &snr)
    {
        if (h.rows() < 1 || h.cols() < 1)
            throw std::domain_error("mimo_se: empty channel matrix.");
        if (!h.allFinite())
            throw std::domain_error("mimo_se: non-finite channel entry.");

        const double rho = snr.rho();
        ComplexMatrix gram = h.rows() <= h.cols() ? ComplexMatrix(h * h.adjoint()) : ComplexMatrix(h.adjoint() * h);
        gram *= rho;
        gram.diagonal().array() += 1.0;

        Eigen::LLT<ComplexMatrix> llt(gram);
        if (llt.info() != Eigen::Success || llt.rcond() < kMinReciprocalCondition)
            return se_from_singular_values(h, rho);

        double nats = 0.0;
        auto diag = llt.matrixLLT().diagonal();
        for (Eigen::Index i = 0; i < diag.size(); ++i)
            nats += std::log(diag(i).real());
        // det = prod(L_ii)^2 and every factor is >= 1
        return std::max(0.0, 2.0 * nats / std::log(2.0));
    }

    double subarray_se(const ComplexMatrix &h_full, int n_rx, int n_tx, const SnrConfig &snr)
    {
        if (n_rx < 1 || n_tx < 1 || n_rx > h_full.rows() || n_tx > h_full.cols())
            throw std::domain_error("subarray_se: " + std::to_string(n_rx) + "x" + std::to_string(n_tx) +
                                    " does not fit in a " + std::to_string(h_full.rows()) + "x" +
                                    std::to_string(h_full.cols()) + " channel.");
        return mimo_se(h_full.topLeftCorner(n_rx, n_tx), snr);
    }

    SizeMap linear_size_map(const SizeLadder &ladder)
    {
        SizeMap map;
        for (const auto &opt : ladder.options())
            map.emplace_back(opt.cost, opt.cost);
        return map;
    }

    SizeMap square_size_map(const SizeLadder &ladder, int fixed_tx)
    {
        if (fixed_tx < 1)
            throw std::invalid_argument("square_size_map: the fixed terminal needs at least one antenna.");
        SizeMap map;
        for (const auto &opt : ladder.options())
            map.emplace_back(opt.cost, opt.cost == 0 ? 0 : fixed_tx);
        return map;
    }

    DimensionShortfallError::DimensionShortfallError(double f_ghz, const std::string &option_label, int need_rx,
                                                     int need_tx, long have_rx, long have_tx)
        : std::invalid_argument("build_se_table: option " + option_label + " at " + detail::format_shortest(f_ghz) +
                                " GHz needs " + std::to_string(need_rx) + "x" + std::to_string(need_tx) +
                                " but the channels are " + std::to_string(have_rx) + "x" + std::to_string(have_tx) + ".")
    {
    }

    double pairwise_sum(std::span<const double> values)
    {
        if (values.empty())
            return 0.0;
        if (values.size() <= 2)
            return values.size() == 1 ? values[0] : values[0] + values[1];
        auto half = values.size() / 2;
        return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
    }

    SeTable build_se_table(const ChannelSet &channels, const SizeLadder &ladder, const SizeMap &size_map,
                           const SnrConfig &snr, unsigned threads)
    {
        if (size_map.size() != ladder.size())
            throw std::invalid_argument("build_se_table: size map does not match the ladder.");
        auto freqs = channels.frequencies_ghz();
        if (freqs.empty())
            throw std::invalid_argument("build_se_table: no channel records.");

        Eigen::MatrixXd values = Eigen::MatrixXd::Zero(Eigen::Index(ladder.size()), Eigen::Index(freqs.size()));

        std::vector<std::vector<const ChannelRecord *>> users(freqs.size());
        for (std::size_t f = 0; f < freqs.size(); ++f)
        {
            users[f] = channels.at_frequency(freqs[f]);
            const auto &m = users[f].front()->matrix;
            for (std::size_t o = 1; o < ladder.size(); ++o)
            {
                auto [need_rx, need_tx] = size_map[o];
                if (need_rx > m.rows() || need_tx > m.cols() || need_rx < 1 || need_tx < 1)
                    throw DimensionShortfallError(freqs[f], ladder.label(o), need_rx, need_tx, long(m.rows()),
                                                  long(m.cols()));
            }
        }

        // One cell per (option, frequency); each cell is computed independently.
        const std::size_t cells = (ladder.size() - 1) * freqs.size();
        auto work = [&](std::size_t first, std::size_t stride)
        {
            std::vector<double> per_user;
            for (std::size_t cell = first; cell < cells; cell += stride)
            {
                std::size_t o = 1 + cell / freqs.size();
                std::size_t f = cell % freqs.size();
                per_user.clear();
                for (const auto *rec : users[f])
                    per_user.push_back(subarray_se(rec->matrix, size_map[o].first, size_map[o].second, snr));
                values(Eigen::Index(o), Eigen::Index(f)) = pairwise_sum(per_user) / double(per_user.size());
            }
        };

        threads = std::max(1u, std::min<unsigned>(threads, unsigned(std::max<std::size_t>(cells, 1))));
        if (threads == 1)
            work(0, 1);
        else
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back(work, std::size_t(t), std::size_t(threads));
        }

        return SeTable(std::move(freqs), ladder, std::move(values),
                       channels.scenario_label().empty() ? "channels" : channels.scenario_label());
    }
}
