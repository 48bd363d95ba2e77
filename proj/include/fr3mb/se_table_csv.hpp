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

#ifndef FR3MB_SE_TABLE_CSV_HPP
#define FR3MB_SE_TABLE_CSV_HPP

#include "fr3mb/core_model.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace fr3mb
{
    class TableFormatError : public std::runtime_error
    {
    public:
        TableFormatError(std::size_t line, const std::string &what);
        std::size_t line() const noexcept { return line_; }

    private:
        std::size_t line_;
    };

    // Header "cost,<f1_ghz>,...", then one row per ladder option:
    // "cost,se,..." with at least three decimals. The zero row is always written.
    void write_se_table_csv(std::ostream &out, const SeTable &table);
    std::string se_table_to_csv(const SeTable &table);

    // Reads the same format; a missing zero row is synthesized. Ladder labels
    // are inferred from the costs (SizeLadder::from_costs).
    SeTable read_se_table_csv(std::istream &in, std::string provenance = "csv");
    SeTable load_se_table(const std::string &path);
}

#endif
