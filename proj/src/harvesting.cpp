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

#include "wet/harvesting.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

wet::HarvesterCurve wet::HarvesterCurve::default_curve()
{
    return HarvesterCurve{{{-30.0, 0.05}, {-20.0, 0.15}, {-10.0, 0.30}, {0.0, 0.45}, {10.0, 0.50}}};
}

void wet::HarvesterCurve::validate() const
{
    if (breakpoints.size() < 2)
        throw std::invalid_argument("harvester curve needs at least 2 breakpoints");
    for (std::size_t i = 0; i < breakpoints.size(); ++i)
    {
        const auto &b = breakpoints[i];
        if (!std::isfinite(b.input_dbm))
            throw std::invalid_argument("harvester breakpoint input must be finite");
        if (!(b.efficiency >= 0.0 && b.efficiency <= 1.0))
            throw std::invalid_argument("harvester efficiency must lie in [0, 1]");
        if (i > 0 && !(b.input_dbm > breakpoints[i - 1].input_dbm))
            throw std::invalid_argument("harvester breakpoints must be strictly increasing in input power");
    }
}

double wet::dbm_to_watts(double dbm) noexcept
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double wet::watts_to_dbm(double watts) noexcept
{
    return 10.0 * std::log10(watts) + 30.0;
}

double wet::harvest(double p_in, const HarvesterCurve &c)
{
    if (!(p_in >= 0.0))
        throw std::invalid_argument("input power must be non-negative");
    const auto &bp = c.breakpoints;
    if (p_in <= 0.0)
        return 0.0;

    const double dbm = watts_to_dbm(p_in);
    if (dbm < bp.front().input_dbm)
        return 0.0;
    if (dbm >= bp.back().input_dbm)
        return bp.back().efficiency * dbm_to_watts(bp.back().input_dbm);

    std::size_t i = 1;
    while (bp[i].input_dbm <= dbm)
        ++i;
    const auto &lo = bp[i - 1];
    const auto &hi = bp[i];
    const double t = (dbm - lo.input_dbm) / (hi.input_dbm - lo.input_dbm);
    const double eta = lo.efficiency + t * (hi.efficiency - lo.efficiency);
    return eta * p_in;
}

void wet::Codebook::validate() const
{
    if (codewords.empty())
        throw std::invalid_argument("codebook is empty");
    const auto m = codewords.front().size();
    for (const auto &w : codewords)
    {
        if (w.size() != m)
            throw std::invalid_argument("codewords differ in length");
        if (std::abs(w.norm() - 1.0) > 1e-9)
            throw std::invalid_argument("codeword is not unit norm");
    }
}

wet::Codebook wet::dft_codebook(int n_antennas)
{
    if (n_antennas < 1)
        throw std::invalid_argument("DFT codebook needs at least one antenna");
    Codebook cb;
    cb.codewords.reserve(n_antennas);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_antennas));
    for (int k = 0; k < n_antennas; ++k)
    {
        CVector w(n_antennas);
        for (int m = 0; m < n_antennas; ++m)
        {
            // Reduce k*m modulo M first so the phase stays exact for large arrays.
            const int km = (k * m) % n_antennas;
            w[m] = std::polar(scale, 2.0 * std::numbers::pi * km / n_antennas);
        }
        cb.codewords.push_back(std::move(w));
    }
    return cb;
}

std::vector<double> wet::per_antenna_powers(const ChannelSnapshot &snapshot, int n_antennas)
{
    std::vector<double> out(static_cast<std::size_t>(n_antennas), 0.0);
    for (const auto &s : snapshot)
    {
        if (s.h.size() != n_antennas)
            throw std::invalid_argument("channel length does not match the antenna count");
        for (int m = 0; m < n_antennas; ++m)
            out[m] += s.power * std::norm(s.h[m]);
    }
    return out;
}

double wet::codeword_power(const CVector &w, const ChannelSnapshot &snapshot)
{
    double total = 0.0;
    for (const auto &s : snapshot)
    {
        if (s.h.size() != w.size())
            throw std::invalid_argument("channel length does not match the codeword length");
        total += s.power * std::norm(w.dot(s.h)); // Eigen's dot conjugates the left operand
    }
    return total;
}

wet::CombineResult wet::rf_combine(const ChannelSnapshot &snapshot, const Codebook &cb)
{
    if (cb.codewords.empty())
        throw std::invalid_argument("codebook is empty");
    CombineResult best{0, codeword_power(cb.codewords[0], snapshot)};
    for (std::size_t k = 1; k < cb.codewords.size(); ++k)
    {
        const double p = codeword_power(cb.codewords[k], snapshot);
        if (p > best.power)
            best = {k, p};
    }
    return best;
}

std::string_view wet::to_string(Architecture a) noexcept
{
    switch (a)
    {
    case Architecture::single:
        return "single";
    case Architecture::dc:
        return "dc";
    case Architecture::rf:
        return "rf";
    }
    return "?";
}

wet::Architecture wet::parse_architecture(std::string_view name)
{
    if (name == "single")
        return Architecture::single;
    if (name == "dc")
        return Architecture::dc;
    if (name == "rf")
        return Architecture::rf;
    throw std::invalid_argument("unknown architecture '" + std::string(name) + "' (expected single, dc or rf)");
}

double wet::harvest_architecture(const ChannelSnapshot &snapshot, int n_antennas, Architecture arch,
                                 const HarvesterCurve &c, const Codebook &cb)
{
    if (arch == Architecture::rf)
    {
        if (cb.codewords.empty() || cb.codewords.front().size() != n_antennas)
            throw std::invalid_argument("codebook does not match the antenna count");
        // Validate channel dimensions even for an empty snapshot.
        per_antenna_powers(snapshot, n_antennas);
        return harvest(rf_combine(snapshot, cb).power, c);
    }
    const auto powers = per_antenna_powers(snapshot, n_antennas);
    return harvest_architecture(powers, arch, c);
}

double wet::harvest_architecture(std::span<const double> per_antenna, Architecture arch, const HarvesterCurve &c)
{
    if (per_antenna.empty())
        throw std::invalid_argument("no antennas");
    switch (arch)
    {
    case Architecture::single:
        return harvest(per_antenna[0], c);
    case Architecture::dc:
    {
        double total = 0.0;
        for (double p : per_antenna)
            total += harvest(p, c);
        return total;
    }
    case Architecture::rf:
        break;
    }
    throw std::invalid_argument("RF combining needs the channel snapshot, not per-antenna powers");
}
