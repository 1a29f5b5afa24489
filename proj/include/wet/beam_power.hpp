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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wet
{
    // Every device must receive at least `gamma` watts of RF power: |h_i^H w|^2 >= gamma.
    struct MulticastProblem
    {
        std::vector<CVector> channels;
        double gamma = 1e-6;

        int n_antennas() const { return channels.empty() ? 0 : static_cast<int>(channels.front().size()); }
        void validate() const;
    };

    struct PrecoderSolution
    {
        CVector precoder;
        double tx_power = 0.0;        // ||w||^2, watts
        bool feasible = false;
        double sdr_lower_bound = 0.0; // certified by a dual-feasible point of the relaxation
        int iterations = 0;
    };

    struct PrecoderOptions
    {
        double tol = 1e-4;        // relative duality gap of the relaxation and constraint slack
        int randomizations = 200;
        int max_iterations = 50000;
        bool refine = true; // successive convex approximation after randomization
        std::uint64_t seed = 0;
    };

    // Thrown when the relaxation does not reach `tol` within the iteration budget.
    class ConvergenceError : public std::runtime_error
    {
    public:
        ConvergenceError(const std::string &what, std::optional<PrecoderSolution> best)
            : std::runtime_error(what), best_(std::move(best)) {}

        const std::optional<PrecoderSolution> &best_feasible() const noexcept { return best_; }

    private:
        std::optional<PrecoderSolution> best_;
    };

    // Minimum transmit power multicast precoder.
    //
    // The rank-relaxed problem  min tr(W)  s.t.  h_i^H W h_i >= gamma,  W PSD  is solved with
    // ADMM, alternating a projection onto the PSD cone (eigenvalue clipping) with a projection
    // onto the intersection of the constraint half-spaces. The relaxation value is bracketed
    // by a feasible W and a dual-feasible multiplier vector; iteration stops once the gap is
    // below tol. A rank-one precoder is then extracted by Gaussian randomization around W
    // (each candidate rescaled to feasibility) and optionally polished by successive convex
    // approximation, which never increases power.
    PrecoderSolution min_power_precoder(const MulticastProblem &problem, const PrecoderOptions &options = {});

    struct ConsumptionModel
    {
        double pa_efficiency = 0.35;
        double p_rf = 0.5; // watts per active RF chain
    };

    // Beacon consumption: tx_power / pa_efficiency + n_rf * p_rf.
    double consumption(double tx_power, int n_rf, const ConsumptionModel &model = {});

    struct ConsumptionPoint
    {
        int n_rf = 0;
        double tx_power = 0.0;
        double total_consumption = 0.0;
    };

    struct RfChainSweep
    {
        std::vector<ConsumptionPoint> points;
        std::size_t argmin = 0; // index into points, lowest M on ties

        int optimal_m() const { return points.at(argmin).n_rf; }
    };

    // Digital beamforming (one RF chain per antenna). For each M the channels are truncated
    // to their first M entries, so arrays are nested. Throws if any point is infeasible.
    RfChainSweep sweep_rf_chains(const std::vector<CVector> &full_channels, double gamma, const std::vector<int> &m_values,
                                 const ConsumptionModel &model = {}, const PrecoderOptions &options = {}, unsigned workers = 1);

    // Beacon at the origin with a ULA of max(m_values) elements serving the given devices.
    struct BeaconScenario
    {
        std::vector<Position2D> devices;
        PathLossParams pathloss{2.7, 40.0, 1.0};
        RicianParams rician{10.0};
        double element_spacing = 0.5;
    };

    // Channel of device i is drawn from derive_seed(seed, fading, i).
    std::vector<CVector> beacon_channels(const BeaconScenario &scenario, int n_antennas, std::uint64_t seed);

    RfChainSweep sweep_rf_chains(const BeaconScenario &scenario, double gamma, const std::vector<int> &m_values,
                                 std::uint64_t seed, const ConsumptionModel &model = {},
                                 const PrecoderOptions &options = {}, unsigned workers = 1);

    // n points uniform over a disk centered at the origin.
    std::vector<Position2D> sample_uniform_disk(std::size_t n, double radius, std::uint64_t seed);
}
