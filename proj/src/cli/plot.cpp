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

#include "wet/cli/plot.hpp"
#include "wet/cli/csv.hpp"

#include <stdexcept>
#include <vector>

namespace
{
    using wet::cli::CsvTable;

    struct Series
    {
        std::string key;
        std::vector<std::string> lines;
    };

    // Groups rows by key, keeping first-appearance order.
    class SeriesSet
    {
    public:
        void add(const std::string &key, std::string line)
        {
            for (auto &s : series_)
                if (s.key == key)
                {
                    s.lines.push_back(std::move(line));
                    return;
                }
            series_.push_back({key, {std::move(line)}});
        }

        std::string render(const std::string &header, const std::string &columns) const
        {
            std::string out = header;
            for (std::size_t i = 0; i < series_.size(); ++i)
            {
                if (i > 0)
                    out += "\n\n";
                out += "# series: " + series_[i].key + "\n";
                out += "# " + columns + "\n";
                for (const auto &l : series_[i].lines)
                    out += l + "\n";
            }
            return out;
        }

    private:
        std::vector<Series> series_;
    };

    bool has(const CsvTable &t, std::string_view name)
    {
        for (const auto &h : t.header)
            if (h == name)
                return true;
        return false;
    }

    std::string cost_plot(const CsvTable &t)
    {
        const auto sc = t.column("scenario"), n = t.column("n_devices"), hz = t.column("horizon"),
                   bl = t.column("battery_life"), total = t.column("total");
        bool lifetime = false;
        for (const auto &r : t.rows)
            if (r[hz] != t.rows.front()[hz] || r[bl] != t.rows.front()[bl])
                lifetime = true;

        SeriesSet s;
        if (!lifetime)
        {
            for (const auto &r : t.rows)
                s.add(r[sc], r[n] + " " + r[total]);
            return s.render("# overall cost vs number of connected devices\n"
                            "# x: number of devices [-], y: total cost over the horizon [USD]\n"
                            "# horizon " + t.rows.front()[hz] + " years, battery life " + t.rows.front()[bl] + " years\n\n",
                            "n_devices total_usd");
        }
        for (const auto &r : t.rows)
            s.add(r[sc] + " battery_life=" + r[bl], r[hz] + " " + r[total]);
        return s.render("# overall cost vs hardware lifetime\n"
                        "# x: planning horizon / hardware lifetime [years], y: total cost [USD]\n"
                        "# " + t.rows.front()[n] + " devices\n\n",
                        "horizon_years total_usd");
    }

    std::string outage_plot(const CsvTable &t)
    {
        const auto d = t.column("density"), a = t.column("architecture"), m = t.column("antennas"),
                   o = t.column("outage"), ci = t.column("ci95");
        SeriesSet s;
        for (const auto &r : t.rows)
            s.add(r[a] + " M=" + r[m], r[d] + " " + r[o] + " " + r[ci]);
        return s.render("# outage probability of ambient RF energy harvesting vs source density\n"
                        "# x: transmitter density [1/m^2], y: outage probability [-], yerr: 95% half-width [-]\n\n",
                        "density outage ci95");
    }

    std::string rfchains_plot(const CsvTable &t)
    {
        const auto m = t.column("m"), tx = t.column("tx_power_w"), c = t.column("consumption_w"),
                   opt = t.column("is_optimum");
        SeriesSet s;
        std::string marked;
        for (const auto &r : t.rows)
        {
            s.add("consumption", r[m] + " " + r[c] + " " + r[tx]);
            if (r[opt] == "1")
                marked = r[m] + " " + r[c] + " " + r[tx];
        }
        if (!marked.empty())
            s.add("optimum", marked);
        return s.render("# beacon power consumption vs number of active RF chains (digital beamforming)\n"
                        "# x: RF chains = antennas [-], y: consumption [W], y2: transmit power [W]\n"
                        "# the 'optimum' block marks the minimum-consumption point\n\n",
                        "m consumption_w tx_power_w");
    }

    std::string deploy_plot(const CsvTable &t)
    {
        const auto kind = t.column("kind"), x = t.column("x"), y = t.column("y"), p = t.column("power_w");
        SeriesSet s;
        for (const auto &r : t.rows)
            s.add(r[kind], r[x] + " " + r[y] + " " + r[p]);
        return s.render("# green beacon deployment\n"
                        "# x, y: position [m], power: beacon transmit power or device received power [W]\n"
                        "# 'min' marks the worst device\n\n",
                        "x_m y_m power_w");
    }
}

std::string wet::cli::emit_plot_data(std::string_view csv)
{
    const CsvTable t = parse_csv(csv);
    if (t.header.empty() || t.rows.empty())
        throw std::invalid_argument("cannot emit plot data from an empty CSV");
    if (has(t, "scenario"))
        return cost_plot(t);
    if (has(t, "architecture"))
        return outage_plot(t);
    if (has(t, "is_optimum"))
        return rfchains_plot(t);
    if (has(t, "kind"))
        return deploy_plot(t);
    throw std::invalid_argument("unrecognized CSV header");
}
