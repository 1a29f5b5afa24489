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

#include "wet/cli/runner.hpp"
#include "wet/cli/csv.hpp"
#include "wet/cli/plot.hpp"
#include "wet/random.hpp"

#include <chrono>
#include <fstream>
#include <system_error>

namespace fs = std::filesystem;

namespace
{
    using namespace wet;
    using namespace wet::cli;

    PathLossParams pathloss(const ResolvedConfig &cfg)
    {
        return {cfg.real("pathloss.exponent"), cfg.real("pathloss.fixed_loss_db"), cfg.real("pathloss.reference_distance")};
    }

    std::string cost_csv(const ResolvedConfig &cfg)
    {
        const CostParams p = cost_params(cfg);
        std::vector<CostBreakdown> rows;
        if (cfg.text("sweep.mode") == "devices")
            rows = sweep_devices(p, cfg.ints("sweep.n_devices"));
        else
            rows = sweep_hardware_lifetime(p, cfg.ints("sweep.horizons"), cfg.reals("sweep.battery_lives"),
                                           static_cast<int>(cfg.integer("sweep.lifetime_devices")));

        CsvWriter csv({"scenario", "n_devices", "horizon", "battery_life", "device_install", "device_maintenance",
                       "pb_install", "pb_opex", "total"});
        for (const auto &b : rows)
            csv.row({std::string(to_string(b.scenario)), format_number(b.n_devices), format_number(b.horizon_years),
                     format_number(b.battery_life), format_dollars(b.device_install_total),
                     format_dollars(b.device_maintenance_total), format_dollars(b.pb_install_total),
                     format_dollars(b.pb_opex_total), format_dollars(b.grand_total)});
        return csv.str();
    }

    std::string deploy_csv(const ResolvedConfig &cfg, std::uint64_t seed, unsigned workers)
    {
        const DeploymentProblem problem = deploy_problem(cfg, seed);
        const DeploymentSolution s = optimize(problem, deploy_solver(cfg, workers), seed);

        CsvWriter csv({"kind", "index", "x", "y", "power_w"});
        for (std::size_t i = 0; i < s.pb_positions.size(); ++i)
            csv.row({"pb", format_number(static_cast<std::uint64_t>(i)), format_number(s.pb_positions[i].x),
                     format_number(s.pb_positions[i].y), format_number(s.per_pb_tx_power[i])});
        for (std::size_t i = 0; i < problem.devices.size(); ++i)
            csv.row({"device", format_number(static_cast<std::uint64_t>(i)), format_number(problem.devices[i].x),
                     format_number(problem.devices[i].y), format_number(s.per_device_power[i])});
        const auto &w = problem.devices[s.worst_device_index];
        csv.row({"min", format_number(static_cast<std::uint64_t>(s.worst_device_index)), format_number(w.x),
                 format_number(w.y), format_number(s.min_received_power)});
        return csv.str();
    }

    std::string outage_csv(const ResolvedConfig &cfg, std::uint64_t seed, unsigned workers)
    {
        const OutageConfig base = outage_config(cfg, seed);
        const auto densities = cfg.reals("outage.densities");

        CsvWriter csv({"density", "architecture", "antennas", "trials", "outage", "ci95"});
        for (const auto &name : cfg.words("outage.architectures"))
        {
            OutageConfig c = base;
            c.arch = parse_architecture(name);
            if (c.arch == Architecture::single)
                c.array.n_antennas = 1;
            const auto results = sweep_density(c, densities, workers);
            for (std::size_t i = 0; i < densities.size(); ++i)
                csv.row({format_number(densities[i]), name, format_number(c.array.n_antennas),
                         format_number(results[i].trials), format_number(results[i].outage_estimate),
                         format_number(results[i].ci95_halfwidth)});
        }
        return csv.str();
    }

    std::string rfchains_csv(const ResolvedConfig &cfg, std::uint64_t seed, unsigned workers)
    {
        const BeaconScenario scenario = beacon_scenario(cfg, seed);
        const ConsumptionModel model{cfg.real("rfchains.pa_efficiency"), cfg.real("rfchains.p_rf")};
        PrecoderOptions opt;
        opt.tol = cfg.real("solver.tolerance");
        opt.randomizations = static_cast<int>(cfg.integer("solver.randomizations"));
        opt.max_iterations = static_cast<int>(cfg.integer("solver.max_iterations"));

        const auto sweep = sweep_rf_chains(scenario, cfg.real("rfchains.gamma"), cfg.ints("rfchains.m_values"), seed, model,
                                           opt, workers);
        CsvWriter csv({"m", "tx_power_w", "consumption_w", "is_optimum"});
        for (std::size_t i = 0; i < sweep.points.size(); ++i)
        {
            const auto &p = sweep.points[i];
            csv.row({format_number(p.n_rf), format_number(p.tx_power), format_number(p.total_consumption),
                     i == sweep.argmin ? "1" : "0"});
        }
        return csv.str();
    }

    void write_file(const fs::path &path, const std::string &content)
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error(path.string() + ": cannot open for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.close();
        if (!out)
            throw std::runtime_error(path.string() + ": write failed");
    }
}

wet::cli::ResolvedConfig wet::cli::resolve(const RunConfig &run)
{
    std::vector<std::string> overrides = run.overrides;
    if (run.trials)
    {
        if (run.subcommand != Subcommand::outage)
            throw ConfigError("--trials only applies to the outage subcommand");
        overrides.push_back("outage.trials=" + std::to_string(*run.trials));
    }
    return parse_config(run.subcommand, run.config_path, overrides);
}

wet::CostParams wet::cli::cost_params(const ResolvedConfig &cfg)
{
    CostParams p;
    p.devices_per_pb = static_cast<int>(cfg.integer("cost.devices_per_pb"));
    p.install_grid_pb = to_cents(cfg.real("cost.install_grid_pb"));
    p.install_green_pb = to_cents(cfg.real("cost.install_green_pb"));
    p.install_battery_pb = to_cents(cfg.real("cost.install_battery_pb"));
    p.device_install = to_cents(cfg.real("cost.device_install"));
    p.device_maintenance_fraction = cfg.real("cost.device_maintenance_fraction");
    p.battery_pb_annual_fraction = cfg.real("cost.battery_pb_annual_fraction");
    p.green_pb_replacement_fraction = cfg.real("cost.green_pb_replacement_fraction");
    p.green_pb_replacement_period = cfg.real("cost.green_pb_replacement_period");
    p.pb_avg_power = cfg.real("cost.pb_avg_power");
    p.pb_hours_per_day = cfg.real("cost.pb_hours_per_day");
    p.grid_price = cfg.real("cost.grid_price");
    p.device_battery_life = cfg.real("cost.device_battery_life");
    p.horizon = static_cast<int>(cfg.integer("cost.horizon"));
    p.count_final_replacement = cfg.boolean("cost.count_final_replacement");
    try
    {
        p.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(std::string("cost: ") + e.what());
    }
    return p;
}

wet::DeploymentProblem wet::cli::deploy_problem(const ResolvedConfig &cfg, std::uint64_t seed)
{
    DeploymentProblem p;
    p.k = static_cast<int>(cfg.integer("deploy.k"));
    p.cap = cfg.real("deploy.cap");
    p.pathloss = pathloss(cfg);
    p.map.area = {cfg.real("area.xmin"), cfg.real("area.ymin"), cfg.real("area.xmax"), cfg.real("area.ymax")};
    if (!p.map.area.has_positive_extent())
        throw ConfigError("area: xmax > xmin and ymax > ymin required");
    p.map.components = parse_components(cfg.text("ambient.components"));

    p.devices = parse_positions(cfg.text("devices.positions"));
    if (p.devices.empty())
    {
        Rng rng = make_rng(derive_seed(seed, stream::devices));
        std::uniform_real_distribution<double> ux(p.map.area.xmin, p.map.area.xmax), uy(p.map.area.ymin, p.map.area.ymax);
        for (long long i = 0; i < cfg.integer("devices.random_count"); ++i)
        {
            const double x = ux(rng);
            p.devices.push_back({x, uy(rng)});
        }
    }
    try
    {
        p.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw ConfigError(std::string("deploy: ") + e.what());
    }
    return p;
}

wet::SolverConfig wet::cli::deploy_solver(const ResolvedConfig &cfg, unsigned workers)
{
    SolverConfig s;
    s.restarts = static_cast<int>(cfg.integer("solver.restarts"));
    s.max_evaluations = static_cast<int>(cfg.integer("solver.max_evaluations"));
    s.tolerance = cfg.real("solver.tolerance");
    s.workers = workers;
    return s;
}

wet::OutageConfig wet::cli::outage_config(const ResolvedConfig &cfg, std::uint64_t seed)
{
    OutageConfig c;
    c.disk_radius = cfg.real("outage.disk_radius");
    c.tx_power = cfg.real("outage.tx_power");
    c.pathloss = pathloss(cfg);
    c.rician.k_factor = cfg.real("rician.k_factor");
    c.target = cfg.real("outage.target");
    c.array = {static_cast<int>(cfg.integer("outage.antennas")), cfg.real("array.element_spacing")};
    c.curve = parse_curve(cfg.text("harvester.curve"));
    c.trials = static_cast<std::uint64_t>(cfg.integer("outage.trials"));
    c.seed = seed;
    return c;
}

wet::BeaconScenario wet::cli::beacon_scenario(const ResolvedConfig &cfg, std::uint64_t seed)
{
    BeaconScenario s;
    s.devices = sample_uniform_disk(static_cast<std::size_t>(cfg.integer("rfchains.devices")),
                                    cfg.real("rfchains.disk_radius"), seed);
    s.pathloss = pathloss(cfg);
    s.rician.k_factor = cfg.real("rician.k_factor");
    s.element_spacing = cfg.real("array.element_spacing");
    return s;
}

std::string wet::cli::experiment_csv(const ResolvedConfig &cfg, std::uint64_t seed, unsigned workers)
{
    switch (cfg.subcommand)
    {
    case Subcommand::cost:
        return cost_csv(cfg);
    case Subcommand::deploy:
        return deploy_csv(cfg, seed, workers);
    case Subcommand::outage:
        return outage_csv(cfg, seed, workers);
    case Subcommand::rfchains:
        return rfchains_csv(cfg, seed, workers);
    }
    throw std::logic_error("unknown subcommand");
}

std::vector<wet::cli::GeneratedFile> wet::cli::generate(const ResolvedConfig &cfg, std::uint64_t seed, unsigned workers)
{
    const std::string base(to_string(cfg.subcommand));
    std::string csv = experiment_csv(cfg, seed, workers);
    std::string dat = emit_plot_data(csv);
    return {{base + ".csv", std::move(csv)}, {base + ".dat", std::move(dat)}};
}

wet::cli::RunManifest wet::cli::run(const RunConfig &run)
{
    const auto start = std::chrono::steady_clock::now();
    const ResolvedConfig cfg = resolve(run);
    const auto files = generate(cfg, run.seed, run.workers);

    RunManifest m;
    m.subcommand = std::string(to_string(run.subcommand));
    m.seed = run.seed;
    m.workers = run.workers;
    m.config_source = cfg.source;
    m.overrides = cfg.overrides;
    m.config = cfg.values;

    std::vector<fs::path> written;
    try
    {
        fs::create_directories(run.output_dir);
        for (const auto &f : files)
        {
            const auto path = run.output_dir / f.name;
            written.push_back(path);
            write_file(path, f.content);
            m.outputs.push_back({f.name, sha256_hex(f.content)});
        }
        m.duration_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const auto manifest_path = run.output_dir / "manifest.txt";
        written.push_back(manifest_path);
        write_file(manifest_path, m.to_text());
    }
    catch (...)
    {
        std::error_code ec;
        for (const auto &p : written)
            fs::remove(p, ec);
        throw;
    }
    return m;
}

wet::cli::VerifyReport wet::cli::verify(const fs::path &manifest_path, unsigned workers)
{
    VerifyReport r;
    auto fail = [&](std::string msg)
    {
        r.ok = false;
        r.messages.push_back(std::move(msg));
    };

    const RunManifest m = RunManifest::load(manifest_path);
    const fs::path dir = manifest_path.parent_path();
    for (const auto &o : m.outputs)
    {
        const fs::path p = dir / o.name;
        if (!fs::exists(p))
        {
            fail(o.name + ": missing");
            continue;
        }
        const auto d = file_sha256(p);
        if (d != o.sha256)
            fail(o.name + ": on-disk digest " + d + " differs from recorded " + o.sha256);
        else
            r.messages.push_back(o.name + ": on-disk digest ok");
    }

    std::vector<std::string> replay;
    for (const auto &[k, v] : m.config)
        replay.push_back(k + "=" + v);
    const ResolvedConfig cfg = parse_config_text(parse_subcommand(m.subcommand), "", "", replay);
    const auto files = generate(cfg, m.seed, workers);
    for (const auto &o : m.outputs)
    {
        const GeneratedFile *f = nullptr;
        for (const auto &g : files)
            if (g.name == o.name)
                f = &g;
        if (!f)
        {
            fail(o.name + ": not produced on replay");
            continue;
        }
        const auto d = sha256_hex(f->content);
        if (d != o.sha256)
            fail(o.name + ": replay digest " + d + " differs from recorded " + o.sha256);
        else
            r.messages.push_back(o.name + ": replay digest ok");
    }
    return r;
}
