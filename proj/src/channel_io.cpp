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

#include "fr3mb/channel_io.hpp"

#include "number_format.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

namespace fr3mb
{
    namespace
    {
        using Kind = ChannelParseError::Kind;

        std::vector<std::string_view> split_ws(std::string_view line)
        {
            std::vector<std::string_view> out;
            std::size_t i = 0;
            while (i < line.size())
            {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                std::size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                    ++i;
                if (i > start)
                    out.push_back(line.substr(start, i - start));
            }
            return out;
        }

        // "key=value" -> value, or nullopt when the key does not match.
        std::optional<std::string_view> keyed(std::string_view token, std::string_view key)
        {
            if (token.size() <= key.size() || token.substr(0, key.size()) != key || token[key.size()] != '=')
                return std::nullopt;
            return token.substr(key.size() + 1);
        }

        // Parses "a+bi" / "a-bi"; the split is the last sign not part of an exponent.
        std::optional<std::complex<double>> parse_complex(std::string_view token)
        {
            if (token.size() < 2 || token.back() != 'i')
                return std::nullopt;
            token.remove_suffix(1);

            std::size_t split = std::string_view::npos;
            for (std::size_t i = token.size(); i-- > 1;)
                if ((token[i] == '+' || token[i] == '-') && token[i - 1] != 'e' && token[i - 1] != 'E')
                {
                    split = i;
                    break;
                }
            if (split == std::string_view::npos)
                return std::nullopt;

            auto re = detail::parse_double(token.substr(0, split));
            auto im = detail::parse_double(token.substr(split));
            if (!re || !im)
                return std::nullopt;
            return std::complex<double>(*re, *im);
        }
    }

    ChannelParseError::ChannelParseError(Kind kind, std::size_t line, const std::string &what)
        : std::runtime_error("channel file line " + std::to_string(line) + ": " + what), kind_(kind), line_(line)
    {
    }

    std::string format_complex(std::complex<double> value)
    {
        std::string out = detail::format_scientific17(value.real());
        std::string im = detail::format_scientific17(value.imag());
        if (im.front() != '-')
            out.push_back('+');
        out += im;
        out.push_back('i');
        return out;
    }

    ChannelSet ingest_channels(std::istream &in, std::string scenario_label)
    {
        std::string line;
        std::size_t line_no = 0;

        auto next_line = [&]() -> bool
        {
            while (std::getline(in, line))
            {
                ++line_no;
                if (!detail::trim(line).empty())
                    return true;
            }
            return false;
        };

        if (!next_line())
            throw ChannelParseError(Kind::MalformedHeader, line_no, "missing '#channels v1' header");

        long long rx = 0, tx = 0;
        {
            auto tokens = split_ws(line);
            std::optional<long long> r, t;
            if (tokens.size() == 4 && tokens[0] == "#channels" && tokens[1] == "v1")
            {
                if (auto v = keyed(tokens[2], "rx"))
                    r = detail::parse_integer(*v);
                if (auto v = keyed(tokens[3], "tx"))
                    t = detail::parse_integer(*v);
            }
            if (!r || !t || *r < 1 || *t < 1)
                throw ChannelParseError(Kind::MalformedHeader, line_no,
                                        "expected '#channels v1 rx=<R> tx=<T>' with positive dimensions");
            rx = *r;
            tx = *t;
        }

        ChannelSet set(std::move(scenario_label));
        while (next_line())
        {
            const std::size_t record_line = line_no;
            auto tokens = split_ws(line);
            std::optional<long long> user;
            std::optional<double> freq;
            if (tokens.size() == 2)
            {
                if (auto v = keyed(tokens[0], "user"))
                    user = detail::parse_integer(*v);
                if (auto v = keyed(tokens[1], "f_ghz"))
                    freq = detail::parse_double(*v);
            }
            if (!user || !freq || !std::isfinite(*freq) || *freq <= 0.0)
                throw ChannelParseError(Kind::MalformedRecord, line_no, "expected 'user=<id> f_ghz=<f>'");

            if (set.find(int(*user), *freq))
                throw ChannelParseError(Kind::DuplicateKey, record_line,
                                        "duplicate record for user " + std::to_string(*user) + " at " +
                                            detail::format_shortest(*freq) + " GHz");

            ComplexMatrix matrix(rx, tx);
            for (long long r = 0; r < rx; ++r)
            {
                if (!next_line())
                    throw ChannelParseError(Kind::DimensionMismatch, line_no,
                                            "record for user " + std::to_string(*user) + " has " + std::to_string(r) +
                                                " rows, expected " + std::to_string(rx));
                auto entries = split_ws(line);
                if (entries.size() == 2 && keyed(entries[0], "user"))
                    throw ChannelParseError(Kind::DimensionMismatch, line_no,
                                            "record for user " + std::to_string(*user) + " has " + std::to_string(r) +
                                                " rows, expected " + std::to_string(rx));
                if ((long long)entries.size() != tx)
                    throw ChannelParseError(Kind::DimensionMismatch, line_no,
                                            "row has " + std::to_string(entries.size()) + " entries, expected " +
                                                std::to_string(tx));
                for (long long c = 0; c < tx; ++c)
                {
                    auto value = parse_complex(entries[std::size_t(c)]);
                    if (!value)
                        throw ChannelParseError(Kind::MalformedRecord, line_no,
                                                "malformed complex entry '" + std::string(entries[std::size_t(c)]) + "'");
                    if (!std::isfinite(value->real()) || !std::isfinite(value->imag()))
                        throw ChannelParseError(Kind::NonFiniteEntry, line_no,
                                                "non-finite entry in record for user " + std::to_string(*user));
                    matrix(r, c) = *value;
                }
            }
            set.add({int(*user), *freq, std::move(matrix)});
        }
        return set;
    }

    ChannelSet ingest_channels_file(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("Cannot open channel file '" + path + "'.");
        return ingest_channels(in, path);
    }

    void write_channels(std::ostream &out, const ChannelSet &set)
    {
        if (set.size() == 0)
            throw std::invalid_argument("write_channels: empty channel set.");
        const auto rows = set.records().front().matrix.rows();
        const auto cols = set.records().front().matrix.cols();
        for (const auto &r : set.records())
            if (r.matrix.rows() != rows || r.matrix.cols() != cols)
                throw std::invalid_argument("write_channels: all records must share one rx x tx shape.");

        out << "#channels v1 rx=" << rows << " tx=" << cols << '\n';
        for (const auto &r : set.records())
        {
            out << "user=" << r.user_id << " f_ghz=" << detail::format_shortest(r.f_center_ghz) << '\n';
            for (Eigen::Index i = 0; i < rows; ++i)
            {
                for (Eigen::Index j = 0; j < cols; ++j)
                {
                    if (j > 0)
                        out << ' ';
                    out << format_complex(r.matrix(i, j));
                }
                out << '\n';
            }
        }
    }

    std::string channels_to_string(const ChannelSet &set)
    {
        std::ostringstream out;
        write_channels(out, set);
        return out.str();
    }
}
