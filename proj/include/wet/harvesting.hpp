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

#include "wet/channel.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wet
{
    struct Breakpoint
    {
        double input_dbm = 0.0;
        double efficiency = 0.0; // in [0, 1]
    };

    // Piecewise rectenna transfer curve. Efficiency is interpolated linearly over the input
    // power in dBm. Below the first breakpoint (sensitivity) nothing is harvested; above the
    // last one (saturation) the output stays at efficiency_last * saturation input.
    struct HarvesterCurve
    {
        std::vector<Breakpoint> breakpoints;

        static HarvesterCurve default_curve();

        double sensitivity_dbm() const { return breakpoints.front().input_dbm; }
        double saturation_input_dbm() const { return breakpoints.back().input_dbm; }

        void validate() const;
    };

    double dbm_to_watts(double dbm) noexcept;
    double watts_to_dbm(double watts) noexcept;

    double harvest(double p_in, const HarvesterCurve &c);

    struct Codebook
    {
        std::vector<CVector> codewords;

        std::size_t size() const { return codewords.size(); }
        void validate() const;
    };

    Codebook dft_codebook(int n_antennas);

    // One ambient source as seen by the receive array: amplitude channel and the power scale
    // (transmit power) it is multiplied with.
    struct SourceChannel
    {
        CVector h;
        double power = 1.0;
    };

    using ChannelSnapshot = std::vector<SourceChannel>;

    // Incident power per antenna, summed incoherently across sources.
    std::vector<double> per_antenna_powers(const ChannelSnapshot &snapshot, int n_antennas);

    // sum_s p_s |w^H h_s|^2
    double codeword_power(const CVector &w, const ChannelSnapshot &snapshot);

    struct CombineResult
    {
        std::size_t best_index = 0;
        double power = 0.0; // watts at the rectifier input
    };

    // Best codeword by received RF power, ties broken by lowest index.
    CombineResult rf_combine(const ChannelSnapshot &snapshot, const Codebook &cb);

    enum class Architecture
    {
        single,
        dc,
        rf
    };

    std::string_view to_string(Architecture a) noexcept;
    Architecture parse_architecture(std::string_view name);

    // single: rectify antenna 0; dc: one rectifier per antenna, outputs summed;
    // rf: rectify the best codeword's combined power. Phase-shifter consumption is ignored.
    double harvest_architecture(const ChannelSnapshot &snapshot, int n_antennas, Architecture arch,
                                const HarvesterCurve &c, const Codebook &cb);

    // Variant for precomputed per-antenna incident powers. RF combining needs phases and is rejected.
    double harvest_architecture(std::span<const double> per_antenna, Architecture arch, const HarvesterCurve &c);
}
