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

#ifndef FR3MB_TOOLS_COMMANDS_HPP
#define FR3MB_TOOLS_COMMANDS_HPP

#include "fr3mb/channel.hpp"
#include "fr3mb/core_model.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace fr3mb::cli
{
    // Runs one command line (args[0] is the program name). Returns the exit
    // status: 0 on success, 1 on validation or I/O failure, 2 on usage errors.
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

    // Scenario JSON: {"kind": "indoor" | "outdoor" | "custom", ...field overrides}.
    // The kind selects the preset; every other key overrides one field.
    // Throws ConfigurationError naming the offending field.
    ScenarioConfig scenario_from_json(const nlohmann::json &j);

    // "linear:<max>" or "square:<max>".
    SizeLadder parse_ladder(const std::string &spec);

    // "lo:hi" or "lo:hi:step", inclusive.
    std::vector<int> parse_budget_range(const std::string &spec);

    // Availability from frequency lists; empty `only` means "all".
    AvailabilityMask mask_from_lists(const SeTable &table, const std::string &only, const std::string &exclude);
}

#endif
