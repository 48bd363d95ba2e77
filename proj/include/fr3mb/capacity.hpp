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

#ifndef FR3MB_CAPACITY_HPP
#define FR3MB_CAPACITY_HPP

#include "fr3mb/channel.hpp"
#include "fr3mb/core_model.hpp"

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fr3mb
{
    // Linear SNR per transmit antenna. Power is fixed per antenna, so rho is
    // not divided by the number of transmit antennas.
    class SnrConfig
    {
    public:
        explicit SnrConfig(double rho_per_antenna);
        static SnrConfig from_db(double snr_db);

        double rho() const { return rho_; }

    private:
        double rho_;
    };

    /// log2 det(I + rho H H^H) in bits/s/Hz.
    ///
    /// The determinant is taken on the smaller Gram form (H H^H or H^H H)
    /// through a Cholesky factorization; when the factorization fails or its
    /// reciprocal condition estimate drops below 1e-12 the value is summed
    /// over singular values instead. Throws std::domain_error for non-finite
    /// entries.
    double mimo_se(const ComplexMatrix &h, const SnrConfig &snr);

    /// mimo_se of the leading n_rx x n_tx block.
    double subarray_se(const ComplexMatrix &h_full, int n_rx, int n_tx, const SnrConfig &snr);

    // (n_rx, n_tx) per ladder option; entry 0 belongs to the zero option and is ignored.
    using SizeMap = std::vector<std::pair<int, int>>;

    /// Option n -> (n, n).
    SizeMap linear_size_map(const SizeLadder &ladder);
    /// Option k -> (k^2, fixed_tx): a k x k array at the receive end against a fixed terminal.
    SizeMap square_size_map(const SizeLadder &ladder, int fixed_tx);

    class DimensionShortfallError : public std::invalid_argument
    {
    public:
        DimensionShortfallError(double f_ghz, const std::string &option_label, int need_rx, int need_tx, long have_rx,
                                long have_tx);
    };

    /// Mean subarray_se over users per (option, frequency). Means use
    /// pairwise summation in ascending user-id order, so `threads` does not
    /// change the result.
    SeTable build_se_table(const ChannelSet &channels, const SizeLadder &ladder, const SizeMap &size_map,
                           const SnrConfig &snr, unsigned threads = 1);

    // Pairwise (cascade) sum with a fixed split order.
    double pairwise_sum(std::span<const double> values);
}

#endif
