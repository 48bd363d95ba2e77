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

#ifndef FR3MB_NUMBER_FORMAT_HPP
#define FR3MB_NUMBER_FORMAT_HPP

#include <optional>
#include <string>
#include <string_view>

namespace fr3mb::detail
{
    // Shortest round-trip fixed notation, zero-padded to min_decimals.
    std::string format_fixed(double value, int min_decimals);

    // Shortest round-trip representation ("7", "13.5").
    std::string format_shortest(double value);

    // Fixed notation rounded to exactly `decimals` places, for reports.
    std::string format_rounded(double value, int decimals);

    // Scientific notation with 17 significant digits.
    std::string format_scientific17(double value);

    // Whole-string parse; nullopt on trailing garbage or empty input.
    std::optional<double> parse_double(std::string_view text);
    std::optional<long long> parse_integer(std::string_view text);

    std::string_view trim(std::string_view text);
}

#endif
