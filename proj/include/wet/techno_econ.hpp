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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wet
{
    // Money in integer cents. Each line item is rounded to the cent once; totals are exact sums.
    using Cents = std::int64_t;

    std::string format_dollars(Cents c);

    // Round a dollar amount to the nearest cent, half away from zero.
    Cents to_cents(double dollars);

    enum class Scenario
    {
        baseline,   // devices run on batteries only
        grid_pb,    // mains powered beacons
        battery_pb, // battery powered beacons
        green_pb    // beacons powered by ambient energy
    };

    inline constexpr std::array<Scenario, 4> all_scenarios{Scenario::baseline, Scenario::grid_pb, Scenario::battery_pb,
                                                           Scenario::green_pb};

    std::string_view to_string(Scenario s) noexcept;
    Scenario parse_scenario(std::string_view name);

    struct CostParams
    {
        int devices_per_pb = 50;
        Cents install_grid_pb = 30000;
        Cents install_green_pb = 32000;
        Cents install_battery_pb = 37000;
        Cents device_install = 2000;
        double device_maintenance_fraction = 0.5; // of device_install per battery replacement
        double battery_pb_annual_fraction = 0.30; // of install_battery_pb per year
        double green_pb_replacement_fraction = 0.38; // of install_green_pb per replacement period
        double green_pb_replacement_period = 25.0;   // years
        double pb_avg_power = 6.0;       // watts, continuous average draw
        double pb_hours_per_day = 24.0;  // hours the beacon draws pb_avg_power
        double grid_price = 0.25;        // dollars per kWh
        double device_battery_life = 5.0; // years
        int horizon = 15;                // years
        bool count_final_replacement = false; // replace a battery that dies exactly at the horizon

        void validate() const;
    };

    struct CostBreakdown
    {
        Scenario scenario = Scenario::baseline;
        int n_devices = 0;
        int horizon_years = 0;
        double battery_life = 0.0;
        Cents device_install_total = 0;
        Cents device_maintenance_total = 0;
        Cents pb_install_total = 0;
        Cents pb_opex_total = 0;
        Cents grand_total = 0;
    };

    // Battery replacements of one device over the horizon: ceil(T / L) - 1, plus one if the
    // final replacement is counted and T is a multiple of L.
    int battery_replacements(int horizon, double battery_life, bool count_final = false);

    // Operating cost of a single beacon over the horizon.
    Cents pb_opex(Scenario s, const CostParams &p);
    Cents pb_install(Scenario s, const CostParams &p);

    CostBreakdown scenario_cost(Scenario s, int n_devices, const CostParams &p);

    // All four scenarios for each N, grouped by N in input order.
    std::vector<CostBreakdown> sweep_devices(const CostParams &p, const std::vector<int> &n_list);

    // All four scenarios for every (horizon, battery life) pair, horizon-major.
    std::vector<CostBreakdown> sweep_hardware_lifetime(const CostParams &p, const std::vector<int> &horizons,
                                                       const std::vector<double> &battery_lives, int n_devices = 100);

    // Smallest N in [lo, hi] at which `s` is strictly cheaper than the baseline.
    std::optional<int> crossover(Scenario s, const CostParams &p, int lo = 1, int hi = 100);
}
