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

#include "manifest.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fr3mb::cli
{
    std::string sha256_hex(const std::string &data)
    {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
            throw std::runtime_error("SHA-256 computation failed.");

        std::ostringstream hex;
        for (unsigned int i = 0; i < length; ++i)
            hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
        return hex.str();
    }

    std::string RunManifest::config_digest() const
    {
        std::string material = "command=" + command + "\n";
        for (const auto &[key, value] : arguments)
            material += key + "=" + value + "\n";
        for (const auto &path : input_files)
        {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                throw std::runtime_error("Cannot read input '" + path + "' for the run manifest.");
            std::ostringstream bytes;
            bytes << in.rdbuf();
            material += "input:" + std::to_string(bytes.str().size()) + "\n" + bytes.str();
        }
        return sha256_hex(material);
    }

    std::string RunManifest::to_json() const
    {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["config_digest"] = config_digest();
        j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
        j["tool_version"] = kToolVersion;
        j["arguments"] = arguments;
        j["inputs"] = input_files;
        j["outputs"] = output_paths;
        if (!notes.empty())
            j["notes"] = notes;
        return j.dump(2) + "\n";
    }

    void RunManifest::write_next_to(const std::string &output_path) const
    {
        const std::string path = output_path + ".manifest.json";
        std::ofstream out(path, std::ios::binary);
        out << to_json();
        if (!out)
            throw std::runtime_error("Cannot write manifest '" + path + "'.");
    }
}
