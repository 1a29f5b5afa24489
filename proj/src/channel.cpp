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

#include <cmath>
#include <numbers>
#include <stdexcept>

double wet::distance(const Position2D &a, const Position2D &b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

void wet::PathLossParams::validate() const
{
    if (!(exponent > 0.0) || !std::isfinite(exponent))
        throw std::invalid_argument("path loss exponent must be positive");
    if (!(reference_distance > 0.0) || !std::isfinite(reference_distance))
        throw std::invalid_argument("path loss reference distance must be positive");
    if (!(fixed_loss_db >= 0.0) || !std::isfinite(fixed_loss_db))
        throw std::invalid_argument("fixed path loss must be non-negative");
}

void wet::RicianParams::validate() const
{
    if (!(k_factor >= 0.0) || std::isnan(k_factor))
        throw std::invalid_argument("Rician K factor must be non-negative");
}

void wet::ArrayConfig::validate() const
{
    if (n_antennas < 1)
        throw std::invalid_argument("array needs at least one antenna");
    if (!(element_spacing > 0.0) || !std::isfinite(element_spacing))
        throw std::invalid_argument("element spacing must be positive");
}

double wet::path_gain(double d, const PathLossParams &p)
{
    const double ratio = std::max(d, p.reference_distance) / p.reference_distance;
    return std::pow(10.0, -p.fixed_loss_db / 10.0) * std::pow(ratio, -p.exponent);
}

std::vector<wet::Position2D> wet::sample_hppp(double density, double radius, Rng &rng, Position2D center)
{
    if (!(density >= 0.0) || !std::isfinite(density))
        throw std::invalid_argument("HPPP density must be non-negative");
    if (!(radius > 0.0))
        throw std::invalid_argument("HPPP radius must be positive");

    std::vector<Position2D> out;
    const double mean = density * std::numbers::pi * radius * radius;
    if (mean <= 0.0)
        return out;

    std::poisson_distribution<long long> count_dist(mean);
    const long long count = count_dist(rng);
    out.reserve(static_cast<std::size_t>(count));

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (long long i = 0; i < count; ++i)
    {
        const double r = radius * std::sqrt(unit(rng));
        const double phi = 2.0 * std::numbers::pi * unit(rng);
        out.push_back({center.x + r * std::cos(phi), center.y + r * std::sin(phi)});
    }
    return out;
}

std::vector<wet::Position2D> wet::sample_hppp(double density, double radius, std::uint64_t seed, Position2D center)
{
    Rng rng = make_rng(seed);
    return sample_hppp(density, radius, rng, center);
}

wet::CVector wet::steering_vector(double theta, const ArrayConfig &a)
{
    a.validate();
    CVector v(a.n_antennas);
    const double step = 2.0 * std::numbers::pi * a.element_spacing * std::sin(theta);
    for (int m = 0; m < a.n_antennas; ++m)
        v[m] = std::polar(1.0, step * m);
    return v;
}

double wet::arrival_angle(const Position2D &source, const Position2D &device) noexcept
{
    const double dx = source.x - device.x;
    const double dy = source.y - device.y;
    if (dx == 0.0 && dy == 0.0)
        return 0.0;
    return std::atan2(dy, dx);
}

wet::CVector wet::sample_channel(const Position2D &source, const Position2D &device, const ArrayConfig &a,
                                 const RicianParams &r, const PathLossParams &p, Rng &rng)
{
    const double gain = path_gain(distance(source, device), p);
    const bool pure_los = std::isinf(r.k_factor);
    const double los = pure_los ? 1.0 : std::sqrt(r.k_factor / (r.k_factor + 1.0));
    const double nlos = pure_los ? 0.0 : std::sqrt(1.0 / (r.k_factor + 1.0));

    CVector h = steering_vector(arrival_angle(source, device), a) * los;
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    for (int m = 0; m < a.n_antennas; ++m)
    {
        const double re = gauss(rng);
        const double im = gauss(rng);
        h[m] += nlos * cplx(re, im);
    }
    return h * std::sqrt(gain);
}

wet::CVector wet::sample_channel(const Position2D &source, const Position2D &device, const ArrayConfig &a,
                                 const RicianParams &r, const PathLossParams &p, std::uint64_t seed)
{
    Rng rng = make_rng(seed);
    return sample_channel(source, device, a, r, p, rng);
}
