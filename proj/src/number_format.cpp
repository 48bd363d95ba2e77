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

#include "number_format.hpp"

#include <charconv>
#include <system_error>

namespace fr3mb::detail
{
    std::string format_fixed(double value, int min_decimals)
    {
        char buffer[512];
        auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::fixed);
        if (ec != std::errc())
            return format_scientific17(value);

        std::string out(buffer, end);
        auto dot = out.find('.');
        int decimals = dot == std::string::npos ? 0 : int(out.size() - dot - 1);
        if (dot == std::string::npos && min_decimals > 0)
            out.push_back('.');
        for (; decimals < min_decimals; ++decimals)
            out.push_back('0');
        return out;
    }

    std::string format_rounded(double value, int decimals)
    {
        char buffer[512];
        auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::fixed, decimals);
        return ec == std::errc() ? std::string(buffer, end) : format_scientific17(value);
    }

    std::string format_shortest(double value)
    {
        char buffer[64];
        auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
        return ec == std::errc() ? std::string(buffer, end) : std::string();
    }

    std::string format_scientific17(double value)
    {
        char buffer[64];
        auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::scientific, 16);
        return ec == std::errc() ? std::string(buffer, end) : std::string();
    }

    std::optional<double> parse_double(std::string_view text)
    {
        text = trim(text);
        if (!text.empty() && text.front() == '+')
            text.remove_prefix(1);
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
            return std::nullopt;
        return value;
    }

    std::optional<long long> parse_integer(std::string_view text)
    {
        text = trim(text);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
            return std::nullopt;
        return value;
    }

    std::string_view trim(std::string_view text)
    {
        const char *ws = " \t\r\n";
        auto first = text.find_first_not_of(ws);
        if (first == std::string_view::npos)
            return {};
        auto last = text.find_last_not_of(ws);
        return text.substr(first, last - first + 1);
    }
}
