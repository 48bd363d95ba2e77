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

#include <array>

namespace fr3mb
{
    namespace
    {
        using Rows = std::array<std::array<double, 5>, 9>;

        // Rows 1x1 .. 9x9; columns 7, 10, 14, 20, 24 GHz.
        constexpr Rows kIndoorLab{{
            {6.525, 6.553, 6.527, 6.520, 6.451},
            {9.145, 9.286, 8.969, 9.202, 9.126},
            {12.252, 11.917, 11.427, 11.962, 11.733},
            {15.617, 15.299, 15.045, 15.348, 15.141},
            {17.986, 17.460, 17.126, 17.359, 17.208},
            {20.486, 19.604, 19.278, 19.406, 19.182},
            {23.606, 22.576, 22.247, 22.579, 21.980},
            {25.738, 24.568, 24.125, 24.459, 23.813},
            {28.083, 26.606, 26.150, 26.394, 25.630}}};

        constexpr Rows kOutdoorUma{{
            {6.302, 6.720, 6.258, 6.514, 6.553},
            {8.737, 9.152, 8.537, 8.649, 8.677},
            {10.405, 10.882, 10.250, 10.184, 10.302},
            {12.377, 13.339, 13.004, 13.279, 12.769},
            {13.587, 14.635, 14.438, 14.815, 14.170},
            {14.743, 15.934, 15.723, 16.036, 15.340},
            {16.354, 17.956, 17.696, 18.056, 17.434},
            {17.373, 19.070, 18.878, 19.336, 18.645},
            {18.422, 20.200, 19.983, 20.446, 19.690}}};

        SeTable make_table(const Rows &rows, const char *provenance)
        {
            Eigen::MatrixXd values = Eigen::MatrixXd::Zero(10, 5);
            for (int r = 0; r < 9; ++r)
                for (int c = 0; c < 5; ++c)
                    values(r + 1, c) = rows[std::size_t(r)][std::size_t(c)];
            return SeTable({7.0, 10.0, 14.0, 20.0, 24.0}, SizeLadder::linear(9), std::move(values), provenance);
        }
    }

    ReferenceTables builtin_reference_tables()
    {
        return {make_table(kIndoorLab, "builtin:indoor"), make_table(kOutdoorUma, "builtin:outdoor")};
    }
}
