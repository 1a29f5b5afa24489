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


#include "wet/beam_power.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace wet;
using Catch::Approx;

namespace
{
    std::vector<CVector> random_channels(int m, int n, std::uint64_t seed)
    {
        Rng rng = make_rng(seed);
        std::normal_distribution<double> g(0.0, std::sqrt(0.5));
        std::vector<CVector> h(n, CVector(m));
        for (auto &v : h)
            for (int i = 0; i < m; ++i)
                v[i] = cplx(g(rng), g(rng)) * 1e-2;
        return h;
    }

    double min_gain(const std::vector<CVector> &h, const CVector &w)
    {
        double g = INFINITY;
        for (const auto &v : h)
            g = std::min(g, std::norm(v.dot(w)));
        return g;
    }

    // w = [a, sqrt(1 - a^2) e^{j phi}] up to a global phase, rescaled to feasibility.
    double brute_force_m2(const std::vector<CVector> &h, double gamma, int grid)
    {
        double best = INFINITY;
        CVector u(2);
        for (int i = 0; i <= grid; ++i)
        {
            const double a = static_cast<double>(i) / grid;
            for (int j = 0; j < grid; ++j)
            {
                u << a, std::polar(std::sqrt(1.0 - a * a), 2.0 * std::numbers::pi * j / grid);
                best = std::min(best, gamma / min_gain(h, u));
            }
        }
        return best;
    }
}

TEST_CASE("consumption model", "[beam_power]")
{
    CHECK(consumption(0.0, 4) == 2.0);
    CHECK(consumption(0.35, 1) == Approx(1.5).epsilon(1e-15));
    CHECK(consumption(1.0, 8) == Approx(1.0 / 0.35 + 4.0).epsilon(1e-15));
    CHECK(consumption(1.0, 8) == Approx(6.857).margin(5e-4));
    CHECK(consumption(1.0, 9) > consumption(1.0, 8));
    CHECK(consumption(1.1, 8) > consumption(1.0, 8));
    CHECK_THROWS(consumption(-1.0, 1));
    CHECK_THROWS(consumption(1.0, 1, {0.0, 0.5}));
}

TEST_CASE("single device gets the matched filter", "[beam_power]")
{
    const auto h = random_channels(6, 1, 3);
    const double gamma = 2e-6;
    const auto s = min_power_precoder({h, gamma});
    REQUIRE(s.feasible);
    CHECK(s.tx_power == Approx(gamma / h[0].squaredNorm()).epsilon(1e-6));
    // precoder parallel to h
    CHECK(std::abs(h[0].dot(s.precoder)) == Approx(h[0].norm() * s.precoder.norm()).epsilon(1e-6));
}

TEST_CASE("scalar case", "[beam_power]")
{
    const auto h = random_channels(1, 5, 4);
    const double gamma = 1e-6;
    double worst = INFINITY;
    for (const auto &v : h)
        worst = std::min(worst, std::norm(v[0]));
    const auto s = min_power_precoder({h, gamma});
    CHECK(s.tx_power == Approx(gamma / worst).epsilon(1e-6));
}

TEST_CASE("solution invariants", "[beam_power]")
{
    for (std::uint64_t seed = 0; seed < 5; ++seed)
    {
        const auto h = random_channels(4, 6, 100 + seed);
        const double gamma = 1e-6;
        PrecoderOptions opt;
        opt.seed = seed;
        const auto s = min_power_precoder({h, gamma}, opt);
        REQUIRE(s.feasible);
        CHECK(s.tx_power == Approx(s.precoder.squaredNorm()).epsilon(1e-12));
        CHECK(min_gain(h, s.precoder) >= gamma * (1.0 - opt.tol));
        CHECK(s.sdr_lower_bound <= s.tx_power * (1.0 + opt.tol));
        CHECK(s.sdr_lower_bound > 0.0);
    }
}

TEST_CASE("M = 2, N = 3 against a discretized oracle", "[beam_power]")
{
    for (std::uint64_t seed = 0; seed < 3; ++seed)
    {
        const auto h = random_channels(2, 3, 200 + seed);
        const double gamma = 1e-6;
        const double oracle = brute_force_m2(h, gamma, 300);
        const auto s = min_power_precoder({h, gamma});
        CHECK(s.tx_power <= 1.02 * oracle);
        CHECK(s.tx_power >= 0.98 * oracle);
    }
}

TEST_CASE("problem validation", "[beam_power]")
{
    CHECK_THROWS(min_power_precoder({{}, 1e-6}));
    CHECK_THROWS(min_power_precoder({random_channels(2, 2, 1), 0.0}));
    auto h = random_channels(2, 2, 1);
    h[1] = CVector::Zero(2);
    CHECK_THROWS(min_power_precoder({h, 1e-6}));
    h[1] = CVector::Ones(3);
    CHECK_THROWS(min_power_precoder({h, 1e-6}));
}

TEST_CASE("LoS single device sweep follows the closed form", "[beam_power]")
{
    const double gain = 1e-4;
    const double gamma = 1.75e-3; // continuous optimum at M = 10
    const CVector h = std::sqrt(gain) * steering_vector(0.4, {32, 0.5});
    std::vector<int> ms;
    for (int m = 1; m <= 32; ++m)
        ms.push_back(m);
    const auto sweep = sweep_rf_chains(std::vector<CVector>{h}, gamma, ms);

    int want = 1;
    double best = INFINITY;
    for (int m = 1; m <= 32; ++m)
    {
        const double tx = gamma / (m * gain);
        REQUIRE(sweep.points[m - 1].tx_power == Approx(tx).epsilon(1e-6));
        const double c = tx / 0.35 + 0.5 * m;
        if (c < best)
        {
            best = c;
            want = m;
        }
    }
    const double cont = std::sqrt(gamma / (0.175 * gain));
    CHECK((want == static_cast<int>(std::floor(cont)) || want == static_cast<int>(std::ceil(cont))));
    CHECK(sweep.optimal_m() == want);
}

TEST_CASE("vanishing gamma picks the smallest array", "[beam_power]")
{
    const auto h = random_channels(8, 3, 9);
    const auto sweep = sweep_rf_chains(h, 1e-12, {2, 4, 8});
    CHECK(sweep.optimal_m() == 2);
}

TEST_CASE("transmit power is non-increasing over nested arrays", "[beam_power]")
{
    BeaconScenario sc;
    sc.devices = sample_uniform_disk(4, 10.0, 0);
    const auto sweep = sweep_rf_chains(sc, 1e-6, {1, 2, 3, 4, 6, 8, 12, 16}, 0);
    for (std::size_t i = 1; i < sweep.points.size(); ++i)
        CHECK(sweep.points[i].tx_power <= sweep.points[i - 1].tx_power * 1.01);
    for (const auto &p : sweep.points)
        CHECK(p.total_consumption == Approx(consumption(p.tx_power, p.n_rf)).epsilon(1e-15));
}

TEST_CASE("sweep is independent of the worker count", "[beam_power]")
{
    BeaconScenario sc;
    sc.devices = sample_uniform_disk(3, 10.0, 5);
    const std::vector<int> ms{1, 2, 4, 8};
    const auto a = sweep_rf_chains(sc, 1e-6, ms, 5, {}, {}, 1);
    const auto b = sweep_rf_chains(sc, 1e-6, ms, 5, {}, {}, 4);
    for (std::size_t i = 0; i < ms.size(); ++i)
        CHECK(a.points[i].tx_power == b.points[i].tx_power);
    CHECK(a.argmin == b.argmin);
}

TEST_CASE("beacon channels are nested prefixes", "[beam_power]")
{
    BeaconScenario sc;
    sc.devices = sample_uniform_disk(3, 10.0, 1);
    const auto big = beacon_channels(sc, 16, 7);
    const auto small = beacon_channels(sc, 5, 7);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK((big[i].head(5) - small[i]).norm() == 0.0);
    for (const auto &p : sc.devices)
        CHECK(std::hypot(p.x, p.y) <= 10.0);
}
