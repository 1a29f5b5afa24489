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

#include <string>
#include <string_view>

namespace wet::cli
{
    // Converts one of the experiment CSVs into gnuplot data blocks: one block per series,
    // separated by two blank lines (addressable with `index`), each headed by a
    // `# series: <key>` comment. The file header lists axis semantics and units.
    // The experiment is recognized from the CSV header. Throws on an empty CSV.
    std::string emit_plot_data(std::string_view csv);
}
