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

#include "wet/cli/manifest.hpp"
#include "wet/cli/config.hpp"
#include "wet/cli/csv.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

std::string wet::cli::sha256_hex(std::string_view data)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i)
    {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 0xf];
    }
    return out;
}

std::string wet::cli::file_sha256(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error(path.string() + ": cannot open for digest");
    std::ostringstream buf;
    buf << in.rdbuf();
    return sha256_hex(buf.str());
}

std::string wet::cli::RunManifest::to_text() const
{
    std::string t = "# wetplan run manifest\n";
    auto put = [&](const std::string &k, const std::string &v) { t += k + "=" + v + "\n"; };
    put("version", version);
    put("subcommand", subcommand);
    put("seed", std::to_string(seed));
    put("workers", std::to_string(workers));
    put("duration_s", format_number(duration_s));
    put("config_source", config_source);
    for (std::size_t i = 0; i < overrides.size(); ++i)
        put("override." + std::to_string(i), overrides[i]);
    for (const auto &[k, v] : config)
        put("config." + k, v);
    for (std::size_t i = 0; i < outputs.size(); ++i)
    {
        put("output." + std::to_string(i) + ".name", outputs[i].name);
        put("output." + std::to_string(i) + ".sha256", outputs[i].sha256);
    }
    return t;
}

wet::cli::RunManifest wet::cli::RunManifest::parse(std::string_view text)
{
    RunManifest m;
    m.version.clear();
    std::map<std::size_t, std::string> overrides;
    std::map<std::size_t, OutputFile> outputs;

    std::size_t start = 0, line_no = 0;
    while (start < text.size())
    {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        const std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument("manifest line " + std::to_string(line_no) + ": expected key=value");
        const std::string key(line.substr(0, eq));
        const std::string value(line.substr(eq + 1));

        auto index_after = [&](std::string_view prefix)
        {
            const auto rest = std::string_view(key).substr(prefix.size());
            const auto dot = rest.find('.');
            return static_cast<std::size_t>(parse_integer(rest.substr(0, dot)));
        };

        if (key == "version")
            m.version = value;
        else if (key == "subcommand")
            m.subcommand = value;
        else if (key == "seed")
            m.seed = std::stoull(value);
        else if (key == "workers")
            m.workers = static_cast<unsigned>(std::stoul(value));
        else if (key == "duration_s")
            m.duration_s = parse_real(value);
        else if (key == "config_source")
            m.config_source = value;
        else if (key.starts_with("override."))
            overrides[index_after("override.")] = value;
        else if (key.starts_with("config."))
            m.config[key.substr(7)] = value;
        else if (key.starts_with("output."))
        {
            auto &o = outputs[index_after("output.")];
            if (key.ends_with(".name"))
                o.name = value;
            else if (key.ends_with(".sha256"))
                o.sha256 = value;
            else
                throw std::invalid_argument("manifest line " + std::to_string(line_no) + ": unknown key " + key);
        }
        else
            throw std::invalid_argument("manifest line " + std::to_string(line_no) + ": unknown key " + key);
    }
    for (auto &[i, v] : overrides)
        m.overrides.push_back(std::move(v));
    for (auto &[i, o] : outputs)
        m.outputs.push_back(std::move(o));
    return m;
}

wet::cli::RunManifest wet::cli::RunManifest::load(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error(path.string() + ": cannot open manifest");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}
