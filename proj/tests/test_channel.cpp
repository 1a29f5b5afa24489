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

#include "wet/channel.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace wet;
using Catch::Approx;

TEST_CASE("path_gain closed forms", "[channel]")
{
    const PathLossParams p{2.7, 40.0, 1.0};
    CHECK(path_gain(1.0, p) == Approx(1e-4).epsilon(1e-12));
    CHECK(path_gain(10.0, p) == Approx(std::pow(10.0, -6.7)).epsilon(1e-12));
    CHECK(path_gain(10.0, p) == Approx(1.995e-7).epsilon(1e-3));
    CHECK(path_gain(0.1, p) == path_gain(1.0, p));
    CHECK(path_gain(0.0, p) == path_gain(1.0, p));
}

TEST_CASE("path_gain is non-increasing and continuous at d0", "[channel]")
{
    const PathLossParams p{3.0, 10.0, 2.0};
    double prev = path_gain(0.0, p);
    for (double d = 0.01; d < 50.0; d += 0.01)
    {
        const double g = path_gain(d, p);
        REQUIRE(g <= prev);
        prev = g;
    }
    CHECK(path_gain(2.0 + 1e-12, p) == Approx(path_gain(2.0, p)).epsilon(1e-9));
}

TEST_CASE("invalid parameters are rejected", "[channel]")
{
    CHECK_THROWS(PathLossParams{2.0, 0.0, 0.0}.validate());
    CHECK_THROWS(RicianParams{-1.0}.validate());
    CHECK_THROWS(ArrayConfig{0, 0.5}.validate());
    CHECK_THROWS(sample_hppp(-1.0, 10.0, std::uint64_t{1}));
    CHECK_THROWS(sample_hppp(1.0, 0.0, std::uint64_t{1}));
}

TEST_CASE("sample_hppp", "[channel]")
{
    CHECK(sample_hppp(0.0, 10.0, std::uint64_t{3}).empty());

    const auto a = sample_hppp(0.5, 10.0, std::uint64_t{42});
    const auto b = sample_hppp(0.5, 10.0, std::uint64_t{42});
    CHECK(a == b);
    for (const auto &p : a)
        REQUIRE(std::hypot(p.x, p.y) <= 10.0);

    // mean count = lambda pi r^2 = 31.416 for 0.1 / m^2 on a 10 m disk
    Rng rng = make_rng(7);
    const int draws = 100000;
    double total = 0.0;
    for (int i = 0; i < draws; ++i)
        total += static_cast<double>(sample_hppp(0.1, 10.0, rng).size());
    CHECK(std::abs(total / draws - 0.1 * std::numbers::pi * 100.0) < 0.2);
}

TEST_CASE("hppp points are uniform over the disk", "[channel]")
{
    // fraction inside r/2 should be 1/4
    Rng rng = make_rng(11);
    std::size_t inner = 0, all = 0;
    for (int i = 0; i < 2000; ++i)
        for (const auto &p : sample_hppp(0.2, 10.0, rng, {3.0, -2.0}))
        {
            ++all;
            inner += std::hypot(p.x - 3.0, p.y + 2.0) < 5.0;
        }
    CHECK(static_cast<double>(inner) / all == Approx(0.25).margin(0.01));
}

TEST_CASE("steering_vector", "[channel]")
{
    const auto one = steering_vector(0.7, {1, 0.5});
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one(0) - cplx(1.0, 0.0)) < 1e-15);

    const auto broad = steering_vector(0.0, {6, 0.5});
    for (int m = 0; m < 6; ++m)
        CHECK(std::abs(broad(m) - cplx(1.0, 0.0)) < 1e-15);

    const auto end = steering_vector(std::numbers::pi / 2, {4, 0.5});
    for (int m = 0; m < 4; ++m)
    {
        const cplx want = std::polar(1.0, std::numbers::pi * m);
        CHECK(std::abs(end(m) - want) < 1e-12);
        CHECK(std::abs(end(m)) == Approx(1.0));
    }
}

TEST_CASE("sample_channel LoS limit", "[channel]")
{
    const PathLossParams p{2.7, 40.0, 1.0};
    const ArrayConfig a{8, 0.5};
    const Position2D src{3.0, 4.0}, dev{0.0, 0.0};
    const auto h = sample_channel(src, dev, a, {1e12}, p, std::uint64_t{5});
    const CVector want = std::sqrt(path_gain(5.0, p)) * steering_vector(arrival_angle(src, dev), a);
    CHECK((h - want).norm() / want.norm() < 1e-5);

    const auto inf = sample_channel(src, dev, a, {INFINITY}, p, std::uint64_t{5});
    CHECK((inf - want).norm() / want.norm() < 1e-12);
}

TEST_CASE("sample_channel fading is power normalized", "[channel]")
{
    const PathLossParams p{2.7, 40.0, 1.0};
    const Position2D src{5.0, 0.0}, dev{0.0, 0.0};
    const int draws = 100000;
    double sum0 = 0.0, sum_norm = 0.0;
    for (int i = 0; i < draws; ++i)
    {
        const auto h = sample_channel(src, dev, {4, 0.5}, {10.0}, p, derive_seed(1, stream::fading, i));
        sum0 += std::norm(h(0));
        sum_norm += h.squaredNorm();
    }
    const double g = path_gain(5.0, p);
    CHECK(std::abs(sum0 / draws / g - 1.0) < 0.02);
    CHECK(std::abs(sum_norm / draws / (4.0 * g) - 1.0) < 0.02);
}

TEST_CASE("Rayleigh power is exponential (KS at 1%)", "[channel]")
{
    const PathLossParams p{2.7, 40.0, 1.0};
    const double g = path_gain(5.0, p);
    const int n = 5000;
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i)
        x[i] = std::norm(sample_channel({5.0, 0.0}, {0.0, 0.0}, {1, 0.5}, {0.0}, p, derive_seed(2, stream::fading, i))(0));
    std::sort(x.begin(), x.end());
    double d = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const double cdf = 1.0 - std::exp(-x[i] / g);
        d = std::max({d, cdf - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - cdf});
    }
    CHECK(d < 1.628 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("channels of growing arrays are nested", "[channel]")
{
    const PathLossParams p{};
    const auto h8 = sample_channel({2.0, 7.0}, {0.0, 0.0}, {8, 0.5}, {3.0}, p, std::uint64_t{99});
    for (int m = 1; m < 8; ++m)
    {
        const auto hm = sample_channel({2.0, 7.0}, {0.0, 0.0}, {m, 0.5}, {3.0}, p, std::uint64_t{99});
        REQUIRE((hm - h8.head(m)).norm() == 0.0);
    }
}

TEST_CASE("derive_seed separates streams and indices", "[channel]")
{
    CHECK(derive_seed(0, 1, 0) != derive_seed(0, 2, 0));
    CHECK(derive_seed(0, 1, 0) != derive_seed(0, 1, 1));
    CHECK(derive_seed(0, 1, 0) != derive_seed(1, 1, 0));
    CHECK(derive_seed(5, 3, 9) == derive_seed(5, 3, 9));
}
