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

#include "wet/cli/config.hpp"
#include "wet/cli/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace
{
    using wet::cli::KeyDef;
    using Check = std::function<void(std::string_view)>;

    std::string fmt(double v)
    {
        return wet::cli::format_number(v);
    }

    Check real_in(double lo, double hi, bool lo_open = false)
    {
        return [=](std::string_view s)
        {
            const double v = wet::cli::parse_real(s);
            const bool lo_ok = lo_open ? v > lo : v >= lo;
            if (!lo_ok || v > hi)
                throw std::invalid_argument("value " + std::string(s) + " outside " + (lo_open ? "(" : "[") + fmt(lo) +
                                            ", " + (std::isinf(hi) ? "inf)" : fmt(hi) + "]"));
        };
    }

    Check positive() { return real_in(0.0, std::numeric_limits<double>::infinity(), true); }
    Check non_negative() { return real_in(0.0, std::numeric_limits<double>::infinity()); }
    Check any_real() { return real_in(-std::numeric_limits<double>::max(), std::numeric_limits<double>::max()); }

    Check integer_in(long long lo, long long hi = std::numeric_limits<long long>::max())
    {
        return [=](std::string_view s)
        {
            const long long v = wet::cli::parse_integer(s);
            if (v < lo || v > hi)
                throw std::invalid_argument("value " + std::string(s) + " must be at least " + std::to_string(lo) +
                                            (hi == std::numeric_limits<long long>::max() ? "" : " and at most " + std::to_string(hi)));
        };
    }

    Check boolean()
    {
        return [](std::string_view s) { wet::cli::parse_bool(s); };
    }

    Check one_of(std::vector<std::string> choices)
    {
        return [choices](std::string_view s)
        {
            if (std::find(choices.begin(), choices.end(), s) == choices.end())
            {
                std::string all;
                for (const auto &c : choices)
                    all += (all.empty() ? "" : ", ") + c;
                throw std::invalid_argument("'" + std::string(s) + "' is not one of: " + all);
            }
        };
    }

    Check real_list(double lo, bool lo_open = false)
    {
        return [=](std::string_view s)
        {
            const auto v = wet::cli::parse_real_list(s);
            if (v.empty())
                throw std::invalid_argument("list is empty");
            for (double x : v)
                if (lo_open ? !(x > lo) : !(x >= lo))
                    throw std::invalid_argument("list entry " + fmt(x) + " must be " + (lo_open ? "> " : ">= ") + fmt(lo));
        };
    }

    Check int_list(int lo, bool increasing)
    {
        return [=](std::string_view s)
        {
            const auto v = wet::cli::parse_int_list(s);
            if (v.empty())
                throw std::invalid_argument("list is empty");
            for (std::size_t i = 0; i < v.size(); ++i)
            {
                if (v[i] < lo)
                    throw std::invalid_argument("list entry " + std::to_string(v[i]) + " must be >= " + std::to_string(lo));
                if (increasing && i > 0 && v[i] <= v[i - 1])
                    throw std::invalid_argument("list must be strictly increasing");
            }
        };
    }

    Check architectures()
    {
        return [](std::string_view s)
        {
            const auto v = wet::cli::split(s, ',');
            if (v.empty() || (v.size() == 1 && v[0].empty()))
                throw std::invalid_argument("list is empty");
            for (const auto &a : v)
                wet::parse_architecture(a);
        };
    }

    Check curve()
    {
        return [](std::string_view s) { wet::cli::parse_curve(s); };
    }

    Check components()
    {
        return [](std::string_view s)
        {
            const auto c = wet::cli::parse_components(s);
            if (c.empty())
                throw std::invalid_argument("ambient map needs at least one component");
            for (const auto &g : c)
            {
                if (!(g.weight >= 0.0))
                    throw std::invalid_argument("component weight must be non-negative");
                if (!(g.width > 0.0))
                    throw std::invalid_argument("component width must be positive");
            }
        };
    }

    Check positions()
    {
        return [](std::string_view s) { wet::cli::parse_positions(s); };
    }

    std::vector<KeyDef> pathloss_keys(double exponent, double fixed_loss)
    {
        return {
            {"pathloss.exponent", fmt(exponent), "path loss exponent", positive()},
            {"pathloss.fixed_loss_db", fmt(fixed_loss), "distance independent loss [dB]", non_negative()},
            {"pathloss.reference_distance", "1", "near-field clamp distance [m]", positive()},
        };
    }

    std::vector<KeyDef> make_cost()
    {
        return {
            {"cost.devices_per_pb", "50", "devices served per beacon", integer_in(1)},
            {"cost.install_grid_pb", "300", "grid beacon installation [USD]", non_negative()},
            {"cost.install_green_pb", "320", "green beacon installation [USD]", non_negative()},
            {"cost.install_battery_pb", "370", "battery beacon installation [USD]", non_negative()},
            {"cost.device_install", "20", "device installation [USD]", non_negative()},
            {"cost.device_maintenance_fraction", "0.5", "battery replacement cost / device installation", non_negative()},
            {"cost.battery_pb_annual_fraction", "0.30", "annual battery beacon maintenance / installation", non_negative()},
            {"cost.green_pb_replacement_fraction", "0.38", "green beacon EH replacement / installation", non_negative()},
            {"cost.green_pb_replacement_period", "25", "green beacon EH replacement period [years]", positive()},
            {"cost.pb_avg_power", "6", "average beacon draw [W]", non_negative()},
            {"cost.pb_hours_per_day", "24", "hours per day the beacon draws power", real_in(0.0, 24.0)},
            {"cost.grid_price", "0.25", "electricity price [USD/kWh]", non_negative()},
            {"cost.device_battery_life", "5", "device battery life [years]", positive()},
            {"cost.horizon", "15", "planning horizon [years]", integer_in(0, 1000)},
            {"cost.count_final_replacement", "false", "replace batteries that die exactly at the horizon", boolean()},
            {"sweep.mode", "devices", "devices: cost vs N; lifetime: cost vs horizon and battery life", one_of({"devices", "lifetime"})},
            {"sweep.n_devices", "10,50,100", "device counts for the devices sweep", int_list(1, false)},
            {"sweep.horizons", "5,10,15,20", "horizons for the lifetime sweep [years]", int_list(0, false)},
            {"sweep.battery_lives", "1,2,3,5", "battery lives for the lifetime sweep [years]", real_list(0.0, true)},
            {"sweep.lifetime_devices", "100", "device count for the lifetime sweep", integer_in(1)},
        };
    }

    std::vector<KeyDef> make_deploy()
    {
        auto keys = pathloss_keys(3.0, 0.0);
        const std::vector<KeyDef> rest{
            {"deploy.k", "5", "number of green beacons", integer_in(1, 64)},
            {"deploy.cap", "1", "maximum beacon transmit power [W]", positive()},
            {"area.xmin", "0", "service area [m]", any_real()},
            {"area.ymin", "0", "service area [m]", any_real()},
            {"area.xmax", "20", "service area [m]", any_real()},
            {"area.ymax", "20", "service area [m]", any_real()},
            {"ambient.components", "3.7,4,4,3; 2,16,5,3; 2.7,14,15,2.5; 1,5,15,4",
             "ambient map as weight[W],x[m],y[m],width[m] entries separated by ';'", components()},
            {"devices.positions", "", "device positions x,y separated by ';' (empty: draw devices.random_count)", positions()},
            {"devices.random_count", "8", "devices drawn uniformly over the area when no positions are given", integer_in(1)},
            {"solver.restarts", "48", "multi-start count", integer_in(1)},
            {"solver.max_evaluations", "4000", "objective evaluations per local search", integer_in(16)},
            {"solver.tolerance", "1e-9", "relative objective spread that ends a local search", positive()},
        };
        keys.insert(keys.end(), rest.begin(), rest.end());
        return keys;
    }

    std::vector<KeyDef> make_outage()
    {
        auto keys = pathloss_keys(2.7, 40.0);
        const std::vector<KeyDef> rest{
            {"rician.k_factor", "10", "Rician K factor (linear)", non_negative()},
            {"array.element_spacing", "0.5", "receive ULA element spacing [wavelengths]", positive()},
            {"harvester.curve", "-30:0.05,-20:0.15,-10:0.30,0:0.45,10:0.50", "rectifier breakpoints dBm:efficiency", curve()},
            {"outage.densities", "0.5,1,2,4", "transmitter densities [1/m^2]", real_list(0.0)},
            {"outage.architectures", "single,dc,rf", "receiver architectures", architectures()},
            {"outage.antennas", "4", "antennas for dc and rf architectures", integer_in(1, 256)},
            {"outage.trials", "10000", "Monte Carlo trials per point", integer_in(1)},
            {"outage.disk_radius", "10", "deployment disk radius [m]", positive()},
            {"outage.tx_power", "1", "transmit power per ambient source [W]", positive()},
            {"outage.target", "1e-3", "target harvested power [W]", positive()},
        };
        keys.insert(keys.end(), rest.begin(), rest.end());
        return keys;
    }

    std::vector<KeyDef> make_rfchains()
    {
        auto keys = pathloss_keys(2.7, 40.0);
        const std::vector<KeyDef> rest{
            {"rician.k_factor", "10", "Rician K factor (linear)", non_negative()},
            {"array.element_spacing", "0.5", "beacon ULA element spacing [wavelengths]", positive()},
            {"rfchains.devices", "4", "devices drawn uniformly in the disk", integer_in(1)},
            {"rfchains.disk_radius", "10", "device disk radius [m]", positive()},
            {"rfchains.gamma", "1e-6", "required received RF power per device [W]", positive()},
            {"rfchains.m_values", "1-32", "antenna / RF chain counts", int_list(1, true)},
            {"rfchains.pa_efficiency", "0.35", "power amplifier efficiency", real_in(0.0, 1.0, true)},
            {"rfchains.p_rf", "0.5", "consumption per RF chain [W]", non_negative()},
            {"solver.tolerance", "1e-4", "relative gap of the relaxation", positive()},
            {"solver.randomizations", "200", "Gaussian randomization samples", integer_in(0)},
            {"solver.max_iterations", "50000", "relaxation iteration budget", integer_in(10)},
        };
        keys.insert(keys.end(), rest.begin(), rest.end());
        return keys;
    }

    std::size_t edit_distance(std::string_view a, std::string_view b)
    {
        std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
        for (std::size_t j = 0; j <= b.size(); ++j)
            prev[j] = j;
        for (std::size_t i = 1; i <= a.size(); ++i)
        {
            cur[0] = i;
            for (std::size_t j = 1; j <= b.size(); ++j)
                cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
            std::swap(prev, cur);
        }
        return prev[b.size()];
    }

    std::string_view section_of(std::string_view key)
    {
        const auto dot = key.find('.');
        return dot == std::string_view::npos ? std::string_view{} : key.substr(0, dot);
    }

    const KeyDef *find_key(wet::cli::Subcommand s, std::string_view key)
    {
        for (const auto &k : wet::cli::schema(s))
            if (k.name == key)
                return &k;
        return nullptr;
    }

    void apply(wet::cli::ResolvedConfig &cfg, std::string_view key, std::string_view value, const std::string &where)
    {
        const KeyDef *def = find_key(cfg.subcommand, key);
        if (!def)
            throw wet::cli::ConfigError(where + ": unknown key '" + std::string(key) + "' for '" +
                                        std::string(wet::cli::to_string(cfg.subcommand)) + "' (did you mean '" +
                                        wet::cli::nearest_key(cfg.subcommand, key) + "'?)");
        try
        {
            def->check(value);
        }
        catch (const std::exception &e)
        {
            throw wet::cli::ConfigError(where + ": " + std::string(key) + ": " + e.what());
        }
        cfg.values[def->name] = std::string(value);
    }
}

std::string_view wet::cli::to_string(Subcommand s) noexcept
{
    switch (s)
    {
    case Subcommand::cost:
        return "cost";
    case Subcommand::deploy:
        return "deploy";
    case Subcommand::outage:
        return "outage";
    case Subcommand::rfchains:
        return "rfchains";
    }
    return "?";
}

wet::cli::Subcommand wet::cli::parse_subcommand(std::string_view name)
{
    for (auto s : {Subcommand::cost, Subcommand::deploy, Subcommand::outage, Subcommand::rfchains})
        if (to_string(s) == name)
            return s;
    throw ConfigError("unknown subcommand '" + std::string(name) + "' (expected cost, deploy, outage or rfchains)");
}

const std::vector<wet::cli::KeyDef> &wet::cli::schema(Subcommand s)
{
    static const std::vector<KeyDef> cost = make_cost();
    static const std::vector<KeyDef> deploy = make_deploy();
    static const std::vector<KeyDef> outage = make_outage();
    static const std::vector<KeyDef> rfchains = make_rfchains();
    switch (s)
    {
    case Subcommand::cost:
        return cost;
    case Subcommand::deploy:
        return deploy;
    case Subcommand::outage:
        return outage;
    case Subcommand::rfchains:
        return rfchains;
    }
    throw std::logic_error("unknown subcommand");
}

std::string wet::cli::nearest_key(Subcommand s, std::string_view key)
{
    const auto section = section_of(key);
    std::string best;
    std::size_t best_score = std::numeric_limits<std::size_t>::max();
    for (const auto &k : schema(s))
    {
        // A key in the same section wins ties against other sections.
        const std::size_t score = 2 * edit_distance(key, k.name) + (section_of(k.name) == section ? 0 : 1);
        if (score < best_score)
        {
            best_score = score;
            best = k.name;
        }
    }
    return best;
}

const std::string &wet::cli::ResolvedConfig::text(const std::string &key) const
{
    const auto it = values.find(key);
    if (it == values.end())
        throw std::out_of_range("config has no key '" + key + "'");
    return it->second;
}

double wet::cli::ResolvedConfig::real(const std::string &key) const { return parse_real(text(key)); }
long long wet::cli::ResolvedConfig::integer(const std::string &key) const { return parse_integer(text(key)); }
bool wet::cli::ResolvedConfig::boolean(const std::string &key) const { return parse_bool(text(key)); }
std::vector<double> wet::cli::ResolvedConfig::reals(const std::string &key) const { return parse_real_list(text(key)); }
std::vector<int> wet::cli::ResolvedConfig::ints(const std::string &key) const { return parse_int_list(text(key)); }
std::vector<std::string> wet::cli::ResolvedConfig::words(const std::string &key) const { return split(text(key), ','); }

wet::cli::ResolvedConfig wet::cli::parse_config_text(Subcommand s, std::string_view text, std::string_view source_name,
                                                     const std::vector<std::string> &overrides)
{
    ResolvedConfig cfg;
    cfg.subcommand = s;
    cfg.source = std::string(source_name);
    for (const auto &k : schema(s))
        cfg.values[k.name] = k.default_value;

    std::string section;
    std::set<std::string> seen;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size())
    {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++line_no;
        std::string_view line = text.substr(start, end - start);
        start = end + 1;

        const auto hash = line.find('#');
        if (hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const std::string where = std::string(source_name) + ":" + std::to_string(line_no);
        if (line.front() == '[')
        {
            if (line.back() != ']' || line.size() < 3)
                throw ConfigError(where + ": malformed section header '" + std::string(line) + "'");
            section = std::string(trim(line.substr(1, line.size() - 2)));
            if (section.find_first_of(" \t=") != std::string::npos)
                throw ConfigError(where + ": malformed section name '" + section + "'");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(where + ": expected 'key = value', got '" + std::string(line) + "'");
        const auto key_part = trim(line.substr(0, eq));
        if (key_part.empty())
            throw ConfigError(where + ": missing key before '='");
        const std::string key = section.empty() ? std::string(key_part) : section + "." + std::string(key_part);
        if (!seen.insert(key).second)
            throw ConfigError(where + ": duplicate key '" + key + "'");
        apply(cfg, key, trim(line.substr(eq + 1)), where);
        if (end == text.size())
            break;
    }

    for (const auto &o : overrides)
    {
        const auto eq = o.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set " + o + ": expected key=value");
        const auto key = trim(std::string_view(o).substr(0, eq));
        const auto value = trim(std::string_view(o).substr(eq + 1));
        apply(cfg, key, value, "--set " + std::string(key));
        cfg.overrides.push_back(std::string(key) + "=" + std::string(value));
    }
    return cfg;
}

wet::cli::ResolvedConfig wet::cli::parse_config(Subcommand s, const std::optional<std::filesystem::path> &path,
                                                const std::vector<std::string> &overrides)
{
    if (!path)
        return parse_config_text(s, "", "", overrides);
    std::ifstream in(*path, std::ios::binary);
    if (!in)
        throw ConfigError(path->string() + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(s, buf.str(), path->string(), overrides);
}

double wet::cli::parse_real(std::string_view s)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
        throw std::invalid_argument("'" + std::string(s) + "' is not a finite number");
    return v;
}

long long wet::cli::parse_integer(std::string_view s)
{
    s = trim(s);
    long long v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("'" + std::string(s) + "' is not an integer");
    return v;
}

bool wet::cli::parse_bool(std::string_view s)
{
    s = trim(s);
    if (s == "true" || s == "1" || s == "yes")
        return true;
    if (s == "false" || s == "0" || s == "no")
        return false;
    throw std::invalid_argument("'" + std::string(s) + "' is not a boolean (true/false)");
}

std::vector<double> wet::cli::parse_real_list(std::string_view s)
{
    std::vector<double> out;
    if (trim(s).empty())
        return out;
    for (const auto &item : split(s, ','))
        out.push_back(parse_real(item));
    return out;
}

std::vector<int> wet::cli::parse_int_list(std::string_view s)
{
    std::vector<int> out;
    if (trim(s).empty())
        return out;
    for (const auto &item : split(s, ','))
    {
        const auto dash = item.find('-', 1); // allow a leading minus sign
        if (dash == std::string::npos)
        {
            out.push_back(static_cast<int>(parse_integer(item)));
            continue;
        }
        const auto lo = parse_integer(std::string_view(item).substr(0, dash));
        const auto hi = parse_integer(std::string_view(item).substr(dash + 1));
        if (hi < lo || hi - lo > 100000)
            throw std::invalid_argument("bad range '" + item + "'");
        for (auto v = lo; v <= hi; ++v)
            out.push_back(static_cast<int>(v));
    }
    return out;
}

wet::HarvesterCurve wet::cli::parse_curve(std::string_view s)
{
    HarvesterCurve c;
    for (const auto &item : split(s, ','))
    {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("curve breakpoint '" + item + "' is not dbm:efficiency");
        c.breakpoints.push_back({parse_real(std::string_view(item).substr(0, colon)),
                                 parse_real(std::string_view(item).substr(colon + 1))});
    }
    c.validate();
    return c;
}

std::vector<wet::GaussianComponent> wet::cli::parse_components(std::string_view s)
{
    std::vector<GaussianComponent> out;
    if (trim(s).empty())
        return out;
    for (const auto &item : split(s, ';'))
    {
        const auto v = parse_real_list(item);
        if (v.size() != 4)
            throw std::invalid_argument("ambient component '" + item + "' is not weight,x,y,width");
        out.push_back({v[0], {v[1], v[2]}, v[3]});
    }
    return out;
}

std::vector<wet::Position2D> wet::cli::parse_positions(std::string_view s)
{
    std::vector<Position2D> out;
    if (trim(s).empty())
        return out;
    for (const auto &item : split(s, ';'))
    {
        const auto v = parse_real_list(item);
        if (v.size() != 2)
            throw std::invalid_argument("position '" + item + "' is not x,y");
        out.push_back({v[0], v[1]});
    }
    return out;
}
