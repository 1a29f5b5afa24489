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


#include "wet/cli/csv.hpp"
#include "wet/cli/runner.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace wet::cli;
namespace fs = std::filesystem;

namespace
{
    fs::path scratch(const std::string &name)
    {
        const auto p = fs::temp_directory_path() / ("wetkit_runner_" + name);
        fs::remove_all(p);
        return p;
    }

    std::string slurp(const fs::path &p)
    {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    // Reduced problem sizes so the whole file runs in seconds.
    std::vector<std::string> quick(Subcommand s)
    {
        switch (s)
        {
        case Subcommand::cost:
            return {};
        case Subcommand::deploy:
            return {"solver.restarts=6", "solver.max_evaluations=600", "deploy.k=2", "devices.random_count=4"};
        case Subcommand::outage:
            return {"outage.trials=1500", "outage.densities=0.5,2"};
        case Subcommand::rfchains:
            return {"rfchains.m_values=1-6", "solver.randomizations=40"};
        }
        return {};
    }

    int wetplan(const std::string &args)
    {
        const std::string cmd = std::string(WETPLAN_EXE) + " " + args + " >/dev/null 2>&1";
        const int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    }
}

TEST_CASE("cost with defaults writes 12 rows plus plot data and manifest", "[runner]")
{
    RunConfig rc;
    rc.subcommand = Subcommand::cost;
    rc.output_dir = scratch("cost");
    const auto m = run(rc);
    const auto t = parse_csv(slurp(rc.output_dir / "cost.csv"));
    CHECK(t.rows.size() == 12);
    CHECK(fs::exists(rc.output_dir / "cost.dat"));
    CHECK(fs::exists(rc.output_dir / "manifest.txt"));
    CHECK(m.seed == 0);
    CHECK(m.outputs.size() == 2);
    const auto loaded = RunManifest::load(rc.output_dir / "manifest.txt");
    CHECK(loaded.config.at("cost.horizon") == "15");
    CHECK(verify(rc.output_dir / "manifest.txt").ok);
    fs::remove_all(rc.output_dir);
}

TEST_CASE("every subcommand is independent of the worker count", "[runner]")
{
    for (auto s : {Subcommand::cost, Subcommand::deploy, Subcommand::outage, Subcommand::rfchains})
    {
        const auto cfg = parse_config_text(s, "", "", quick(s));
        const auto one = generate(cfg, 7, 1);
        const auto many = generate(cfg, 7, 8);
        REQUIRE(one.size() == many.size());
        for (std::size_t i = 0; i < one.size(); ++i)
        {
            INFO(to_string(s) << " " << one[i].name);
            CHECK(one[i].content == many[i].content);
        }
    }
}

TEST_CASE("outage twice with the same seed is byte identical", "[runner]")
{
    RunConfig rc;
    rc.subcommand = Subcommand::outage;
    rc.overrides = quick(Subcommand::outage);
    rc.seed = 99;
    rc.output_dir = scratch("outage_a");
    run(rc);
    const auto a = slurp(rc.output_dir / "outage.csv");
    fs::remove_all(rc.output_dir);
    rc.output_dir = scratch("outage_b");
    rc.workers = 3;
    run(rc);
    CHECK(slurp(rc.output_dir / "outage.csv") == a);
    fs::remove_all(rc.output_dir);

    const auto t = parse_csv(a);
    CHECK(t.rows.size() == 6);
    CHECK(t.rows[0][t.column("antennas")] == "1");
}

TEST_CASE("a different seed changes stochastic output", "[runner]")
{
    const auto cfg = parse_config_text(Subcommand::outage, "", "", quick(Subcommand::outage));
    CHECK(experiment_csv(cfg, 1, 1) != experiment_csv(cfg, 2, 1));
}

TEST_CASE("deploy with k = 0 fails without writing files", "[runner]")
{
    RunConfig rc;
    rc.subcommand = Subcommand::deploy;
    rc.overrides = {"deploy.k=0"};
    rc.output_dir = scratch("deploy_k0");
    CHECK_THROWS_AS(run(rc), ConfigError);
    CHECK_FALSE(fs::exists(rc.output_dir / "deploy.csv"));
    CHECK_FALSE(fs::exists(rc.output_dir / "manifest.txt"));
    fs::remove_all(rc.output_dir);
}

TEST_CASE("cross-key checks", "[runner]")
{
    CHECK_THROWS_AS(deploy_problem(parse_config_text(Subcommand::deploy, "", "", {"area.xmax=0"}), 0), ConfigError);
    CHECK_THROWS_AS(deploy_problem(parse_config_text(Subcommand::deploy, "", "", {"devices.positions=50,50"}), 0),
                    ConfigError);
    const auto p = deploy_problem(parse_config_text(Subcommand::deploy, "", "", {"devices.positions=1,2; 3,4"}), 0);
    CHECK(p.devices.size() == 2);
    CHECK_THROWS(resolve(RunConfig{Subcommand::cost, 0, {}, ".", {}, 10, 1}));
}

TEST_CASE("verify detects tampering", "[runner]")
{
    RunConfig rc;
    rc.subcommand = Subcommand::rfchains;
    rc.overrides = quick(Subcommand::rfchains);
    rc.output_dir = scratch("verify");
    run(rc);
    CHECK(verify(rc.output_dir / "manifest.txt", 2).ok);
    {
        std::ofstream f(rc.output_dir / "rfchains.csv", std::ios::app);
        f << "9,9,9,0\n";
    }
    CHECK_FALSE(verify(rc.output_dir / "manifest.txt").ok);
    fs::remove_all(rc.output_dir);
}

TEST_CASE("wetplan exit codes", "[runner][cli]")
{
    const auto dir = scratch("cli");
    CHECK(wetplan("cost --out " + dir.string()) == 0);
    CHECK(wetplan("verify --manifest " + (dir / "manifest.txt").string()) == 0);
    CHECK(wetplan("plot --csv " + (dir / "cost.csv").string()) == 0);
    CHECK(wetplan("cost --set cost.horizn=3 --out " + dir.string() + "/bad") != 0);
    CHECK_FALSE(fs::exists(dir / "bad" / "cost.csv"));
    CHECK(wetplan("deploy --set deploy.k=0 --out " + dir.string() + "/k0") != 0);
    CHECK_FALSE(fs::exists(dir / "k0" / "deploy.csv"));
    CHECK(wetplan("outage --trials 0") != 0);
    CHECK(wetplan("frobnicate") != 0);
    fs::remove_all(dir);
}
