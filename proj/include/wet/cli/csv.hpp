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
#include <string>
#include <string_view>
#include <vector>

namespace wet::cli
{
    // Shortest round-trip decimal representation, independent of the C++ locale.
    std::string format_number(double v);
    std::string format_number(std::int64_t v);
    std::string format_number(std::uint64_t v);
    std::string format_number(int v);

    // Comma separated, LF terminated, fixed column order. Fields never need quoting here.
    class CsvWriter
    {
    public:
        explicit CsvWriter(std::vector<std::string> header);

        CsvWriter &row(const std::vector<std::string> &fields);

        const std::string &str() const noexcept { return text_; }
        std::size_t rows() const noexcept { return rows_; }

    private:
        std::size_t columns_;
        std::size_t rows_ = 0;
        std::string text_;
    };

    struct CsvTable
    {
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;

        // Column index by name; throws std::out_of_range.
        std::size_t column(std::string_view name) const;
    };

    CsvTable parse_csv(std::string_view text);

    std::vector<std::string> split(std::string_view s, char sep);
    std::string_view trim(std::string_view s) noexcept;
}
