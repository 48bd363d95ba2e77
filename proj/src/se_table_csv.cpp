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

#include "fr3mb/se_table_csv.hpp"

#include "number_format.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

namespace fr3mb
{
    namespace
    {
        std::vector<std::string_view> split_commas(std::string_view line)
        {
            std::vector<std::string_view> fields;
            std::size_t start = 0;
            while (true)
            {
                auto comma = line.find(',', start);
                fields.push_back(detail::trim(line.substr(start, comma - start)));
                if (comma == std::string_view::npos)
                    break;
                start = comma + 1;
            }
            return fields;
        }
    }

    TableFormatError::TableFormatError(std::size_t line, const std::string &what)
        : std::runtime_error("SE table line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    void write_se_table_csv(std::ostream &out, const SeTable &table)
    {
        out << "cost";
        for (double f : table.subband_centers_ghz())
            out << ',' << detail::format_shortest(f);
        out << '\n';

        for (std::size_t o = 0; o < table.option_count(); ++o)
        {
            out << table.ladder().cost(o);
            for (std::size_t s = 0; s < table.subband_count(); ++s)
                out << ',' << detail::format_fixed(table.se(o, s), 3);
            out << '\n';
        }
    }

    std::string se_table_to_csv(const SeTable &table)
    {
        std::ostringstream out;
        write_se_table_csv(out, table);
        return out.str();
    }

    SeTable read_se_table_csv(std::istream &in, std::string provenance)
    {
        std::string line;
        std::size_t line_no = 0;

        bool have_header = false;
        std::vector<double> centers;
        while (!have_header && std::getline(in, line))
        {
            ++line_no;
            if (detail::trim(line).empty())
                continue;
            auto fields = split_commas(line);
            if (fields.size() < 2 || fields[0] != "cost")
                throw TableFormatError(line_no, "expected header 'cost,<f1_ghz>,...'");
            for (std::size_t i = 1; i < fields.size(); ++i)
            {
                auto f = detail::parse_double(fields[i]);
                if (!f || !std::isfinite(*f) || *f <= 0.0)
                    throw TableFormatError(line_no, "invalid frequency '" + std::string(fields[i]) + "'");
                centers.push_back(*f);
            }
            have_header = true;
        }
        if (!have_header)
            throw TableFormatError(line_no, "empty input");

        std::vector<int> costs;
        std::vector<std::vector<double>> rows;
        while (std::getline(in, line))
        {
            ++line_no;
            if (detail::trim(line).empty())
                continue;
            auto fields = split_commas(line);
            if (fields.size() != centers.size() + 1)
                throw TableFormatError(line_no, "expected " + std::to_string(centers.size() + 1) + " fields, got " +
                                                    std::to_string(fields.size()));
            auto cost = detail::parse_integer(fields[0]);
            if (!cost || *cost < 0)
                throw TableFormatError(line_no, "invalid cost '" + std::string(fields[0]) + "'");
            if (!costs.empty() && *cost <= costs.back())
                throw TableFormatError(line_no, "costs must increase strictly");

            std::vector<double> row;
            for (std::size_t i = 1; i < fields.size(); ++i)
            {
                auto v = detail::parse_double(fields[i]);
                if (!v || !std::isfinite(*v) || *v < 0.0)
                    throw TableFormatError(line_no, "invalid spectral efficiency '" + std::string(fields[i]) + "'");
                row.push_back(*v);
            }
            if (*cost == 0)
                for (double v : row)
                    if (v != 0.0)
                        throw TableFormatError(line_no, "zero-cost row must be all zeros");
            costs.push_back(int(*cost));
            rows.push_back(std::move(row));
        }

        // zero row is optional on input
        if (costs.empty() || costs.front() != 0)
        {
            costs.insert(costs.begin(), 0);
            rows.insert(rows.begin(), std::vector<double>(centers.size(), 0.0));
        }

        Eigen::MatrixXd values(Eigen::Index(rows.size()), Eigen::Index(centers.size()));
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < centers.size(); ++c)
                values(Eigen::Index(r), Eigen::Index(c)) = rows[r][c];

        try
        {
            return SeTable(std::move(centers), SizeLadder::from_costs(costs), std::move(values), std::move(provenance));
        }
        catch (const std::invalid_argument &e)
        {
            throw TableFormatError(line_no, e.what());
        }
    }

    SeTable load_se_table(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw std::runtime_error("Cannot open SE table '" + path + "'.");
        return read_se_table_csv(in, path);
    }
}
