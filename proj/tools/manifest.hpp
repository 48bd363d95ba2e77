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

#ifndef FR3MB_TOOLS_MANIFEST_HPP
#define FR3MB_TOOLS_MANIFEST_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fr3mb::cli
{
    inline constexpr const char *kToolVersion = "0.3.0";

    // Written next to every output as <first output>.manifest.json.
    struct RunManifest
    {
        explicit RunManifest(std::string command_name) : command(std::move(command_name)) {}

        std::string command;
        std::map<std::string, std::string> arguments; // canonical flag -> value
        std::vector<std::string> input_files;
        std::optional<std::uint64_t> seed;
        std::vector<std::string> output_paths;
        std::vector<std::string> notes;

        // SHA-256 (hex) over the command, the sorted arguments and the bytes
        // of every input file. Stable for identical inputs.
        std::string config_digest() const;

        std::string to_json() const;
        void write_next_to(const std::string &output_path) const;
    };

    std::string sha256_hex(const std::string &data);
}

#endif
