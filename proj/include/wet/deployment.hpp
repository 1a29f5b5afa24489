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

#include <cstddef>
#include <cstdint>
#include <vector>

namespace wet
{
    // Max-min placement of green power beacons. Each beacon transmits whatever ambient power
    // is available at its location, up to `cap`; devices receive the incoherent sum.
    struct DeploymentProblem
    {
        std::vector<Position2D> devices;
        AmbientMap map;
        int k = 1;        // number of beacons
        double cap = 1.0; // watts
        PathLossParams pathloss{3.0, 0.0, 1.0};

        void validate() const;
    };

    struct ObjectiveValue
    {
        double value = 0.0;          // watts at the worst device
        std::size_t worst_device = 0; // lowest index on ties
    };

    struct DeploymentSolution
    {
        std::vector<Position2D> pb_positions;
        std::vector<double> per_pb_tx_power;
        std::vector<double> per_device_power;
        double min_received_power = 0.0;
        std::size_t worst_device_index = 0;
    };

    struct SolverConfig
    {
        int restarts = 48;
        int max_evaluations = 4000; // per local search
        double tolerance = 1e-9;    // relative objective spread that stops a local search
        unsigned workers = 1;
    };

    double received_power(const Position2D &device, const std::vector<Position2D> &pbs, const DeploymentProblem &problem);

    ObjectiveValue objective(const std::vector<Position2D> &pbs, const DeploymentProblem &problem);

    // Evaluates a placement and fills every field of the solution.
    DeploymentSolution evaluate_placement(const std::vector<Position2D> &pbs, const DeploymentProblem &problem);

    // Multi-start Nelder-Mead followed by a pattern-search polish on the 2k coordinates.
    // Candidates are clamped to the area. Restart r draws from derive_seed(seed, restart, r),
    // and the best-of reduction is by restart index, so the result is independent of `workers`.
    DeploymentSolution optimize(const DeploymentProblem &problem, const SolverConfig &solver, std::uint64_t seed);

    // Exhaustive search over unordered k-tuples of lattice points spaced `resolution` apart.
    // Throws std::length_error when more than 1e7 tuples would be enumerated.
    DeploymentSolution grid_oracle(const DeploymentProblem &problem, double resolution);

    // k beacons placed uniformly at random in the area, used as a baseline.
    DeploymentSolution random_placement(const DeploymentProblem &problem, std::uint64_t seed);
}
