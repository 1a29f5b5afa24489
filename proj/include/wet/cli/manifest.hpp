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

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wet::cli
{
    inline constexpr std::string_view toolkit_version = "0.1.0";

    std::string sha256_hex(std::string_view data);
    std::string file_sha256(const std::filesystem::path &path);

    struct OutputFile
    {
        std::string name; // relative to the manifest's directory
        std::string sha256;
    };

    // Flat key=value record of a run. Every resolved config entry appears as config.<key>.
    struct RunManifest
    {
        std::string version{toolkit_version};
        std::string subcommand;
        std::uint64_t seed = 0;
        unsigned workers = 1;
        double duration_s = 0.0;
        std::string config_source;
        std::vector<std::string> overrides;
        std::map<std::string, std::string> config;
        std::vector<OutputFile> outputs;

        std::string to_text() const;
        static RunManifest parse(std::string_view text);
        static RunManifest load(const std::filesystem::path &path);
    };
}
