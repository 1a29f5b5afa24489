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

// wetplan: batch front end for the wetkit experiments.
//
//   wetplan cost     [--config f] [--set k=v]... [--seed n] [--out dir] [--workers n]
//   wetplan deploy   ...
//   wetplan outage   ... [--trials n]
//   wetplan rfchains ...
//   wetplan plot     --csv file [--out file]
//   wetplan verify   --manifest file [--workers n]
//   wetplan keys     <subcommand>

#include "wet/cli/config.hpp"
#include "wet/cli/manifest.hpp"
#include "wet/cli/plot.hpp"
#include "wet/cli/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace
{
    void add_run_options(CLI::App *app, wet::cli::RunConfig &rc, std::string &config_path)
    {
        app->add_option("--config", config_path, "Configuration file")->check(CLI::ExistingFile);
        app->add_option("--set", rc.overrides, "Override a config key (key=value, repeatable)");
        app->add_option("--seed", rc.seed, "Random seed (recorded in the manifest)");
        app->add_option("--out", rc.output_dir, "Output directory");
        app->add_option("--workers", rc.workers, "Worker threads (results do not depend on this)")
            ->check(CLI::Range(1u, 1024u));
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"wetplan: planning and simulation of RF wireless energy transfer networks"};
    app.require_subcommand(1);

    struct Entry
    {
        wet::cli::Subcommand sub;
        const char *help;
    };
    const Entry entries[] = {
        {wet::cli::Subcommand::cost, "Total cost of ownership for the four powering scenarios"},
        {wet::cli::Subcommand::deploy, "Max-min placement of green power beacons"},
        {wet::cli::Subcommand::outage, "Monte Carlo outage of ambient RF energy harvesting"},
        {wet::cli::Subcommand::rfchains, "Beacon consumption vs number of RF chains"},
    };

    wet::cli::RunConfig rc;
    std::string config_path;
    std::uint64_t trials = 0;
    std::vector<std::pair<CLI::App *, wet::cli::Subcommand>> run_cmds;
    for (const auto &e : entries)
    {
        auto *cmd = app.add_subcommand(std::string(wet::cli::to_string(e.sub)), e.help);
        add_run_options(cmd, rc, config_path);
        if (e.sub == wet::cli::Subcommand::outage)
            cmd->add_option("--trials", trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
        run_cmds.emplace_back(cmd, e.sub);
    }

    std::string csv_path, plot_out;
    auto *plot = app.add_subcommand("plot", "Convert an experiment CSV into gnuplot data");
    plot->add_option("--csv", csv_path, "CSV produced by a run")->required()->check(CLI::ExistingFile);
    plot->add_option("--out", plot_out, "Output file (default: stdout)");

    std::string manifest_path;
    unsigned verify_workers = 1;
    auto *verify = app.add_subcommand("verify", "Check output digests and replay a run from its manifest");
    verify->add_option("--manifest", manifest_path, "manifest.txt of a previous run")->required()->check(CLI::ExistingFile);
    verify->add_option("--workers", verify_workers, "Worker threads for the replay")->check(CLI::Range(1u, 1024u));

    std::string keys_for;
    auto *keys = app.add_subcommand("keys", "List configuration keys and defaults");
    keys->add_option("subcommand", keys_for, "cost, deploy, outage or rfchains")->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (*plot)
        {
            std::ifstream in(csv_path, std::ios::binary);
            std::ostringstream buf;
            buf << in.rdbuf();
            const std::string dat = wet::cli::emit_plot_data(buf.str());
            if (plot_out.empty())
                std::cout << dat;
            else
            {
                std::ofstream out(plot_out, std::ios::binary);
                out << dat;
                if (!out)
                    throw std::runtime_error(plot_out + ": write failed");
            }
            return 0;
        }
        if (*verify)
        {
            const auto report = wet::cli::verify(manifest_path, verify_workers);
            for (const auto &m : report.messages)
                std::cout << m << '\n';
            std::cout << (report.ok ? "verify: ok" : "verify: MISMATCH") << '\n';
            return report.ok ? 0 : 1;
        }
        if (*keys)
        {
            for (const auto &k : wet::cli::schema(wet::cli::parse_subcommand(keys_for)))
                std::cout << k.name << " = " << k.default_value << "    # " << k.help << '\n';
            return 0;
        }
        for (const auto &[cmd, sub] : run_cmds)
        {
            if (!*cmd)
                continue;
            rc.subcommand = sub;
            if (!config_path.empty())
                rc.config_path = config_path;
            if (trials > 0)
                rc.trials = trials;
            const auto m = wet::cli::run(rc);
            for (const auto &o : m.outputs)
                std::cout << (rc.output_dir / o.name).string() << "  sha256:" << o.sha256 << '\n';
            std::cout << (rc.output_dir / "manifest.txt").string() << '\n';
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "wetplan: error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
