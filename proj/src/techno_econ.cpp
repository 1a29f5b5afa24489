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

#include "wet/techno_econ.hpp"

#include <cmath>
#include <stdexcept>

namespace
{
    constexpr double days_per_year = 365.0;

    void require(bool ok, const char *what)
    {
        if (!ok)
            throw std::invalid_argument(what);
    }
}

std::string wet::format_dollars(Cents c)
{
    const bool negative = c < 0;
    const auto mag = negative ? -c : c;
    std::string frac = std::to_string(mag % 100);
    if (frac.size() < 2)
        frac.insert(0, "0");
    return (negative ? "-" : "") + std::to_string(mag / 100) + "." + frac;
}

wet::Cents wet::to_cents(double dollars)
{
    return static_cast<Cents>(std::llround(dollars * 100.0));
}

std::string_view wet::to_string(Scenario s) noexcept
{
    switch (s)
    {
    case Scenario::baseline:
        return "baseline";
    case Scenario::grid_pb:
        return "grid_pb";
    case Scenario::battery_pb:
        return "battery_pb";
    case Scenario::green_pb:
        return "green_pb";
    }
    return "?";
}

wet::Scenario wet::parse_scenario(std::string_view name)
{
    for (auto s : all_scenarios)
        if (to_string(s) == name)
            return s;
    throw std::invalid_argument("unknown scenario '" + std::string(name) + "'");
}

void wet::CostParams::validate() const
{
    require(devices_per_pb >= 1, "devices per beacon must be at least 1");
    require(install_grid_pb >= 0 && install_green_pb >= 0 && install_battery_pb >= 0 && device_install >= 0,
            "installation costs must be non-negative");
    require(device_maintenance_fraction >= 0.0 && battery_pb_annual_fraction >= 0.0 &&
                green_pb_replacement_fraction >= 0.0,
            "maintenance fractions must be non-negative");
    require(green_pb_replacement_period > 0.0, "green beacon replacement period must be positive");
    require(pb_avg_power >= 0.0 && grid_price >= 0.0, "beacon power and grid price must be non-negative");
    require(pb_hours_per_day >= 0.0 && pb_hours_per_day <= 24.0, "beacon hours per day must lie in [0, 24]");
    require(device_battery_life > 0.0, "device battery life must be positive");
    require(horizon >= 0, "horizon must be non-negative");
}

int wet::battery_replacements(int horizon, double battery_life, bool count_final)
{
    if (!(battery_life > 0.0))
        throw std::invalid_argument("battery life must be positive");
    if (horizon <= 0)
        return 0;
    const double ratio = static_cast<double>(horizon) / battery_life;
    const double rounded = std::round(ratio);
    const bool exact = std::abs(ratio - rounded) <= 1e-9 * std::max(1.0, ratio);
    const int lifetimes = exact ? static_cast<int>(rounded) : static_cast<int>(std::ceil(ratio));
    int n = lifetimes - 1;
    if (count_final && exact)
        ++n;
    return std::max(n, 0);
}

wet::Cents wet::pb_install(Scenario s, const CostParams &p)
{
    switch (s)
    {
    case Scenario::baseline:
        return 0;
    case Scenario::grid_pb:
        return p.install_grid_pb;
    case Scenario::battery_pb:
        return p.install_battery_pb;
    case Scenario::green_pb:
        return p.install_green_pb;
    }
    throw std::invalid_argument("unknown scenario");
}

wet::Cents wet::pb_opex(Scenario s, const CostParams &p)
{
    const double years = static_cast<double>(p.horizon);
    switch (s)
    {
    case Scenario::baseline:
        return 0;
    case Scenario::grid_pb:
    {
        const double kwh = p.pb_avg_power * p.pb_hours_per_day * days_per_year * years / 1000.0;
        return to_cents(kwh * p.grid_price);
    }
    case Scenario::battery_pb:
        return static_cast<Cents>(std::llround(years * p.battery_pb_annual_fraction * static_cast<double>(p.install_battery_pb)));
    case Scenario::green_pb:
        return static_cast<Cents>(std::llround(years * p.green_pb_replacement_fraction *
                                               static_cast<double>(p.install_green_pb) / p.green_pb_replacement_period));
    }
    throw std::invalid_argument("unknown scenario");
}

wet::CostBreakdown wet::scenario_cost(Scenario s, int n_devices, const CostParams &p)
{
    p.validate();
    if (n_devices < 1)
        throw std::invalid_argument("at least one device is required");

    CostBreakdown b;
    b.scenario = s;
    b.n_devices = n_devices;
    b.horizon_years = p.horizon;
    b.battery_life = p.device_battery_life;
    b.device_install_total = n_devices * p.device_install;

    if (s == Scenario::baseline)
    {
        const Cents per_replacement =
            static_cast<Cents>(std::llround(static_cast<double>(p.device_install) * p.device_maintenance_fraction));
        b.device_maintenance_total =
            n_devices * battery_replacements(p.horizon, p.device_battery_life, p.count_final_replacement) * per_replacement;
    }
    else
    {
        const Cents n_pb = (n_devices + p.devices_per_pb - 1) / p.devices_per_pb;
        b.pb_install_total = n_pb * pb_install(s, p);
        b.pb_opex_total = n_pb * pb_opex(s, p);
    }
    b.grand_total = b.device_install_total + b.device_maintenance_total + b.pb_install_total + b.pb_opex_total;
    return b;
}

std::vector<wet::CostBreakdown> wet::sweep_devices(const CostParams &p, const std::vector<int> &n_list)
{
    if (n_list.empty())
        throw std::invalid_argument("device sweep needs at least one N");
    std::vector<CostBreakdown> out;
    for (int n : n_list)
        for (auto s : all_scenarios)
            out.push_back(scenario_cost(s, n, p));
    return out;
}

std::vector<wet::CostBreakdown> wet::sweep_hardware_lifetime(const CostParams &p, const std::vector<int> &horizons,
                                                             const std::vector<double> &battery_lives, int n_devices)
{
    if (horizons.empty() || battery_lives.empty())
        throw std::invalid_argument("lifetime sweep needs horizons and battery lives");
    for (double l : battery_lives)
        if (!(l > 0.0))
            throw std::invalid_argument("battery life must be positive");
    std::vector<CostBreakdown> out;
    for (int t : horizons)
        for (double l : battery_lives)
        {
            CostParams q = p;
            q.horizon = t;
            q.device_battery_life = l;
            for (auto s : all_scenarios)
                out.push_back(scenario_cost(s, n_devices, q));
        }
    return out;
}

std::optional<int> wet::crossover(Scenario s, const CostParams &p, int lo, int hi)
{
    for (int n = std::max(lo, 1); n <= hi; ++n)
        if (scenario_cost(s, n, p).grand_total < scenario_cost(Scenario::baseline, n, p).grand_total)
            return n;
    return std::nullopt;
}
