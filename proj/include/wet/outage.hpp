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
#include "wet/harvesting.hpp"

#include <cstdint>
#include <vector>

namespace wet
{
    // Ambient RF energy harvesting scenario: transmitters drawn from an HPPP on a disk, the
    // harvesting device at the disk center.
    struct OutageConfig
    {
        double density = 1.0;     // transmitters per m^2
        double disk_radius = 10.0; // meters
        double tx_power = 1.0;    // watts per transmitter
        PathLossParams pathloss{2.7, 40.0, 1.0};
        RicianParams rician{10.0};
        double target = 1e-3; // watts of harvested DC power
        Architecture arch = Architecture::single;
        ArrayConfig array{1, 0.5};
        HarvesterCurve curve = HarvesterCurve::default_curve();
        std::uint64_t trials = 10000;
        std::uint64_t seed = 0;

        void validate() const;
    };

    struct OutageResult
    {
        double outage_estimate = 0.0;
        double ci95_halfwidth = 0.0; // 1.96 sqrt(p (1 - p) / trials)
        std::uint64_t trials = 0;
        std::uint64_t outages = 0;
        double mean_harvested = 0.0; // watts
    };

    // Seed of trial `index` under the configuration's base seed.
    std::uint64_t trial_seed(const OutageConfig &config, std::uint64_t index) noexcept;

    // Channels from the given transmitter positions to the device at the origin.
    ChannelSnapshot snapshot_from_field(const OutageConfig &config, const std::vector<Position2D> &transmitters,
                                        std::uint64_t trial_seed);

    // Draws the transmitter field and its channels for one trial.
    ChannelSnapshot trial_snapshot(const OutageConfig &config, std::uint64_t trial_seed);

    double harvest_snapshot(const OutageConfig &config, const ChannelSnapshot &snapshot, const Codebook &cb);

    // Harvested DC power in one trial.
    double run_trial(const OutageConfig &config, std::uint64_t trial_seed);

    // Outage = fraction of trials with harvested power below the target. Trials are aggregated
    // in fixed blocks, so the estimate is bit-identical for any worker count.
    OutageResult run_outage(const OutageConfig &config, unsigned workers = 1);

    // One run_outage per density, all sharing the configured seed (common random numbers).
    std::vector<OutageResult> sweep_density(const OutageConfig &config, const std::vector<double> &densities,
                                            unsigned workers = 1);
}
