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


#include "wet/deployment.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace wet;
using Catch::Approx;

namespace
{
    DeploymentProblem base(std::vector<Position2D> devices, int k)
    {
        DeploymentProblem p;
        p.devices = std::move(devices);
        p.map = {{{3.7, {4.0, 4.0}, 3.0}, {2.0, {16.0, 5.0}, 3.0}, {2.7, {14.0, 15.0}, 2.5}}, {0.0, 0.0, 20.0, 20.0}};
        p.k = k;
        return p;
    }

    SolverConfig fast()
    {
        SolverConfig s;
        s.restarts = 16;
        s.max_evaluations = 2000;
        return s;
    }
}

TEST_CASE("received_power examples", "[deployment]")
{
    auto p = base({{5.0, 5.0}}, 1);
    p.map = {{{1.0, {5.0, 5.0}, 100.0}}, {0.0, 0.0, 20.0, 20.0}};
    p.pathloss = {3.0, 0.0, 1.0};
    // inside the near-field clamp, ambient >= cap
    CHECK(received_power({5.0, 5.0}, {{5.2, 5.0}}, p) == Approx(transmit_power(p.map, {5.2, 5.0}, 1.0)));
    p.map.components[0].weight = 5.0;
    CHECK(received_power({5.0, 5.0}, {{5.2, 5.0}}, p) == 1.0);
    // 10 m, 1 W, alpha 3
    CHECK(received_power({0.0, 5.0}, {{10.0, 5.0}}, p) == Approx(1e-3).epsilon(1e-12));
    // two equidistant beacons at full power
    const double one_pb = received_power({5.0, 5.0}, {{5.0, 9.0}}, p);
    CHECK(received_power({5.0, 5.0}, {{5.0, 9.0}, {5.0, 1.0}}, p) == Approx(2.0 * one_pb).epsilon(1e-15));
}

TEST_CASE("objective picks the worst device", "[deployment]")
{
    auto p = base({{5.0, 5.0}}, 1);
    const std::vector<Position2D> pbs{{6.0, 6.0}};
    CHECK(objective(pbs, p).value == received_power({5.0, 5.0}, pbs, p));

    p.devices = {{6.0, 6.0}, {15.0, 15.0}};
    const auto o = objective(pbs, p);
    CHECK(o.worst_device == 1);
    CHECK(o.value == received_power({15.0, 15.0}, pbs, p));

    // symmetric devices: lowest index on ties
    p.devices = {{4.0, 6.0}, {8.0, 6.0}};
    CHECK(objective(std::vector<Position2D>{{6.0, 6.0}}, p).worst_device == 0);
}

TEST_CASE("evaluate_placement fills the solution", "[deployment]")
{
    const auto p = base({{2.0, 3.0}, {12.0, 9.0}, {18.0, 18.0}}, 2);
    const std::vector<Position2D> pbs{{4.0, 4.0}, {15.0, 14.0}};
    const auto s = evaluate_placement(pbs, p);
    REQUIRE(s.per_pb_tx_power.size() == 2);
    REQUIRE(s.per_device_power.size() == 3);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(s.per_pb_tx_power[i] == transmit_power(p.map, pbs[i], p.cap));
    CHECK(s.min_received_power == objective(pbs, p).value);
    CHECK(s.worst_device_index == objective(pbs, p).worst_device);
}

TEST_CASE("grid_oracle", "[deployment]")
{
    // 3 x 3 lattice, brute force by hand
    auto p = base({{1.0, 1.0}}, 1);
    p.map.area = {0.0, 0.0, 2.0, 2.0};
    p.map.components = {{0.5, {0.0, 2.0}, 1.0}};
    const auto s = grid_oracle(p, 1.0);
    double best = -1.0;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            best = std::max(best, objective(std::vector<Position2D>{{double(i), double(j)}}, p).value);
    CHECK(s.min_received_power == best);

    // no ambient energy anywhere
    auto dark = base({{3.0, 3.0}, {9.0, 9.0}}, 2);
    for (auto &c : dark.map.components)
        c.weight = 0.0;
    CHECK(grid_oracle(dark, 2.0).min_received_power == 0.0);

    auto big = base({{3.0, 3.0}}, 4);
    CHECK_THROWS_AS(grid_oracle(big, 0.5), std::length_error);
    CHECK_THROWS(grid_oracle(p, 0.0));
}

TEST_CASE("optimize matches the grid oracle on small instances", "[deployment]")
{
    // single Gaussian, one device
    auto p = base({{7.0, 11.0}}, 1);
    p.map.components = {{3.0, {12.0, 8.0}, 3.0}};
    const auto opt = optimize(p, fast(), 1);
    const auto grid = grid_oracle(p, 0.25);
    CHECK(opt.min_received_power >= 0.98 * grid.min_received_power);

    // k = 2 on a 10 x 10 lattice, two devices
    auto q = base({{3.0, 14.0}, {17.0, 6.0}}, 2);
    const double res = 20.0 / 9.0;
    const auto og = grid_oracle(q, res);
    const auto oo = optimize(q, fast(), 2);
    CHECK(oo.min_received_power >= og.min_received_power * (1.0 - 1e-9));
}

TEST_CASE("uniform ambient above cap puts the beacon on the device", "[deployment]")
{
    auto p = base({{6.0, 13.0}}, 1);
    p.map.components = {{10.0, {10.0, 10.0}, 1e4}};
    p.pathloss = {3.0, 6.0, 1.0};
    const auto s = optimize(p, fast(), 3);
    CHECK(distance(s.pb_positions[0], p.devices[0]) <= 1.0 + 1e-9);
    CHECK(s.min_received_power == Approx(std::pow(10.0, -0.6)).epsilon(1e-12));
}

TEST_CASE("optimize invariants", "[deployment]")
{
    const auto p = base({{2.0, 18.0}, {10.0, 10.0}, {18.0, 2.0}, {17.0, 17.0}}, 3);
    const auto s = optimize(p, fast(), 9);
    REQUIRE(s.pb_positions.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
    {
        CHECK(p.map.area.contains(s.pb_positions[i]));
        CHECK(s.per_pb_tx_power[i] <= p.cap);
    }
    const auto again = evaluate_placement(s.pb_positions, p);
    CHECK(again.min_received_power == s.min_received_power);

    // reproducible per seed and independent of workers
    auto par = fast();
    par.workers = 4;
    const auto s4 = optimize(p, par, 9);
    CHECK(s4.pb_positions == s.pb_positions);
    CHECK(s4.min_received_power == s.min_received_power);
}

TEST_CASE("more beacons never hurt", "[deployment]")
{
    const std::vector<Position2D> devs{{2.0, 2.0}, {18.0, 3.0}, {9.0, 17.0}};
    double prev = 0.0;
    for (int k = 1; k <= 4; ++k)
    {
        const double v = optimize(base(devs, k), fast(), 4).min_received_power;
        CHECK(v >= prev * (1.0 - 1e-9));
        prev = v;
    }
}

TEST_CASE("optimize beats random placement", "[deployment]")
{
    const auto p = base({{3.0, 7.0}, {12.0, 16.0}, {17.0, 4.0}}, 2);
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(optimize(p, fast(), seed).min_received_power > random_placement(p, seed).min_received_power);
}

TEST_CASE("problem validation", "[deployment]")
{
    auto p = base({{3.0, 3.0}}, 0);
    CHECK_THROWS(p.validate());
    p.k = 1;
    p.devices = {{30.0, 3.0}};
    CHECK_THROWS(p.validate());
    p.devices.clear();
    CHECK_THROWS(p.validate());
    p.devices = {{3.0, 3.0}};
    p.map.area = {0.0, 0.0, 0.0, 20.0};
    CHECK_THROWS(optimize(p, fast(), 0));
}
