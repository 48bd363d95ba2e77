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

#ifndef FR3MB_CHANNEL_IO_HPP
#define FR3MB_CHANNEL_IO_HPP

#include "fr3mb/channel.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace fr3mb
{
    // Text channel file:
    //
    //   #channels v1 rx=<R> tx=<T>
    //   user=<id> f_ghz=<f>
    //   <R lines of T whitespace-separated entries a+bi / a-bi>
    //   ...
    //
    // Entries are written with 17 significant digits, so write(ingest(x)) == x
    // for files produced by write_channels.

    class ChannelParseError : public std::runtime_error
    {
    public:
        enum class Kind
        {
            MalformedHeader,
            MalformedRecord,
            DimensionMismatch,
            DuplicateKey,
            NonFiniteEntry
        };

        ChannelParseError(Kind kind, std::size_t line, const std::string &what);

        Kind kind() const noexcept { return kind_; }
        std::size_t line() const noexcept { return line_; }

    private:
        Kind kind_;
        std::size_t line_;
    };

    ChannelSet ingest_channels(std::istream &in, std::string scenario_label = "ingested");
    ChannelSet ingest_channels_file(const std::string &path);

    // Throws std::invalid_argument when records differ in dimensions (the
    // format carries a single rx/tx pair) or the set is empty.
    void write_channels(std::ostream &out, const ChannelSet &set);
    std::string channels_to_string(const ChannelSet &set);

    std::string format_complex(std::complex<double> value);
}

#endif
