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

#include "wet/cli/csv.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace
{
    template <typename T>
    std::string to_chars_string(T v)
    {
        std::array<char, 64> buf{};
        const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
        if (res.ec != std::errc())
            throw std::runtime_error("number formatting failed");
        return std::string(buf.data(), res.ptr);
    }
}

std::string wet::cli::format_number(double v)
{
    if (v == 0.0)
        return "0"; // also folds -0
    return to_chars_string(v);
}

std::string wet::cli::format_number(std::int64_t v) { return to_chars_string(v); }
std::string wet::cli::format_number(std::uint64_t v) { return to_chars_string(v); }
std::string wet::cli::format_number(int v) { return to_chars_string(v); }

wet::cli::CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size())
{
    row(header);
    rows_ = 0;
}

wet::cli::CsvWriter &wet::cli::CsvWriter::row(const std::vector<std::string> &fields)
{
    if (fields.size() != columns_)
        throw std::logic_error("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                               std::to_string(columns_));
    for (std::size_t i = 0; i < fields.size(); ++i)
    {
        if (i > 0)
            text_ += ',';
        text_ += fields[i];
    }
    text_ += '\n';
    ++rows_;
    return *this;
}

std::size_t wet::cli::CsvTable::column(std::string_view name) const
{
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name)
            return i;
    throw std::out_of_range("CSV has no column '" + std::string(name) + "'");
}

std::string_view wet::cli::trim(std::string_view s) noexcept
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> wet::cli::split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true)
    {
        const auto pos = s.find(sep, start);
        out.emplace_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

wet::cli::CsvTable wet::cli::parse_csv(std::string_view text)
{
    CsvTable t;
    std::size_t start = 0;
    bool first = true;
    while (start < text.size())
    {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        const auto line = trim(text.substr(start, end - start));
        start = end + 1;
        if (line.empty())
            continue;
        auto fields = split(line, ',');
        if (first)
        {
            t.header = std::move(fields);
            first = false;
        }
        else
        {
            if (fields.size() != t.header.size())
                throw std::invalid_argument("CSV row has " + std::to_string(fields.size()) + " fields, header has " +
                                            std::to_string(t.header.size()));
            t.rows.push_back(std::move(fields));
        }
    }
    return t;
}
