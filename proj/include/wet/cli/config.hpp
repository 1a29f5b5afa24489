// SPDX-License-Identifier: Apache-2.0
//
// wetkit: planning and simulation toolkit for RF wireless energy transfer networks
// Copyright (C) 2026 The wetkit authors
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

#pragma once

#include "wet/ambient.hpp"
#include "wet/channel.hpp"
#include "wet/harvesting.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wet::cli
{
    enum class Subcommand
    {
        cost,
        deploy,
        outage,
        rfchains
    };

    std::string_view to_string(Subcommand s) noexcept;
    Subcommand parse_subcommand(std::string_view name);

    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    struct KeyDef
    {
        std::string name;          // dotted, e.g. "pathloss.exponent"
        std::string default_value; // as it would appear in a config file
        std::string help;
        std::function<void(std::string_view)> check; // throws std::invalid_argument
    };

    const std::vector<KeyDef> &schema(Subcommand s);

    // Closest valid key by edit distance, preferring keys in the same section.
    std::string nearest_key(Subcommand s, std::string_view key);

    // Every key of the subcommand's schema, with defaults filled in.
    class ResolvedConfig
    {
    public:
        Subcommand subcommand = Subcommand::cost;
        std::map<std::string, std::string> values;
        std::vector<std::string> overrides; // "key=value" in the order given
        std::string source;                // config path, or empty when only defaults were used

        const std::string &text(const std::string &key) const;
        double real(const std::string &key) const;
        long long integer(const std::string &key) const;
        bool boolean(const std::string &key) const;
        std::vector<double> reals(const std::string &key) const;
        std::vector<int> ints(const std::string &key) const;
        std::vector<std::string> words(const std::string &key) const;
    };

    // Config files hold `key = value` lines, optionally grouped under `[section]` headers
    // (keys inside a section are prefixed with "section."). `#` starts a comment.
    // Overrides are "key=value" strings applied after the file.
    ResolvedConfig parse_config(Subcommand s, const std::optional<std::filesystem::path> &path,
                                const std::vector<std::string> &overrides = {});
    ResolvedConfig parse_config_text(Subcommand s, std::string_view text, std::string_view source_name,
                                     const std::vector<std::string> &overrides = {});

    // Value parsers shared by the schema checks and the experiment builders.
    double parse_real(std::string_view s);
    long long parse_integer(std::string_view s);
    bool parse_bool(std::string_view s);
    std::vector<double> parse_real_list(std::string_view s);
    // Comma separated integers; "a-b" expands to the inclusive range.
    std::vector<int> parse_int_list(std::string_view s);
    // "dbm:efficiency, dbm:efficiency, ..."
    HarvesterCurve parse_curve(std::string_view s);
    // "weight,x,y,width; weight,x,y,width; ..."
    std::vector<GaussianComponent> parse_components(std::string_view s);
    // "x,y; x,y; ..." (empty string gives an empty list)
    std::vector<Position2D> parse_positions(std::string_view s);
}
