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

#include "wet/outage.hpp"
#include "wet/parallel.hpp"
#include "wet/random.hpp"

#include <cmath>
#include <stdexcept>

namespace
{
    constexpr std::uint64_t block_size = 1024;

    struct BlockTally
    {
        std::uint64_t outages = 0;
        double harvested_sum = 0.0;
    };
}

void wet::OutageConfig::validate() const
{
    if (!(density >= 0.0) || !std::isfinite(density))
        throw std::invalid_argument("density must be non-negative");
    if (!(disk_radius > 0.0))
        throw std::invalid_argument("disk radius must be positive");
    if (!(tx_power > 0.0))
        throw std::invalid_argument("transmit power must be positive");
    if (!(target > 0.0))
        throw std::invalid_argument("target harvested power must be positive");
    if (trials < 1)
        throw std::invalid_argument("at least one trial is required");
    pathloss.validate();
    rician.validate();
    array.validate();
    curve.validate();
}

std::uint64_t wet::trial_seed(const OutageConfig &config, std::uint64_t index) noexcept
{
    return derive_seed(config.seed, stream::trial, index);
}

wet::ChannelSnapshot wet::snapshot_from_field(const OutageConfig &config, const std::vector<Position2D> &transmitters,
                                              std::uint64_t trial_seed)
{
    Rng rng = make_rng(derive_seed(trial_seed, stream::fading));
    const Position2D device{};
    ChannelSnapshot snap;
    snap.reserve(transmitters.size());
    for (const auto &tx : transmitters)
        snap.push_back({sample_channel(tx, device, config.array, config.rician, config.pathloss, rng), config.tx_power});
    return snap;
}

wet::ChannelSnapshot wet::trial_snapshot(const OutageConfig &config, std::uint64_t trial_seed)
{
    Rng rng = make_rng(derive_seed(trial_seed, stream::field));
    const auto field = sample_hppp(config.density, config.disk_radius, rng);
    return snapshot_from_field(config, field, trial_seed);
}

double wet::harvest_snapshot(const OutageConfig &config, const ChannelSnapshot &snapshot, const Codebook &cb)
{
    return harvest_architecture(snapshot, config.array.n_antennas, config.arch, config.curve, cb);
}

double wet::run_trial(const OutageConfig &config, std::uint64_t trial_seed)
{
    const Codebook cb = dft_codebook(config.array.n_antennas);
    return harvest_snapshot(config, trial_snapshot(config, trial_seed), cb);
}

wet::OutageResult wet::run_outage(const OutageConfig &config, unsigned workers)
{
    config.validate();
    const Codebook cb = dft_codebook(config.array.n_antennas);
    const std::uint64_t n_blocks = (config.trials + block_size - 1) / block_size;
    std::vector<BlockTally> tallies(n_blocks);

    parallel_for(n_blocks, workers, [&](std::size_t b)
    {
        const std::uint64_t first = b * block_size;
        const std::uint64_t last = std::min(config.trials, first + block_size);
        BlockTally t;
        for (std::uint64_t i = first; i < last; ++i)
        {
            const double h = harvest_snapshot(config, trial_snapshot(config, trial_seed(config, i)), cb);
            t.harvested_sum += h;
            if (h < config.target)
                ++t.outages;
        }
        tallies[b] = t;
    });

    OutageResult r;
    r.trials = config.trials;
    double sum = 0.0;
    for (const auto &t : tallies)
    {
        r.outages += t.outages;
        sum += t.harvested_sum;
    }
    const double n = static_cast<double>(config.trials);
    r.outage_estimate = static_cast<double>(r.outages) / n;
    r.ci95_halfwidth = 1.96 * std::sqrt(r.outage_estimate * (1.0 - r.outage_estimate) / n);
    r.mean_harvested = sum / n;
    return r;
}

std::vector<wet::OutageResult> wet::sweep_density(const OutageConfig &config, const std::vector<double> &densities,
                                                  unsigned workers)
{
    if (densities.empty())
        throw std::invalid_argument("density sweep needs at least one density");
    std::vector<OutageResult> out;
    out.reserve(densities.size());
    for (double d : densities)
    {
        OutageConfig c = config;
        c.density = d;
        out.push_back(run_outage(c, workers));
    }
    return out;
}
