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
#include "wet/cli/manifest.hpp"
#include "wet/cli/plot.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

using namespace wet;
using namespace wet::cli;
using Catch::Matchers::ContainsSubstring;

TEST_CASE("empty outage config resolves to the documented defaults", "[config]")
{
    const auto c = parse_config_text(Subcommand::outage, "", "empty.cfg");
    CHECK(c.real("outage.disk_radius") == 10.0);
    CHECK(c.real("outage.tx_power") == 1.0);
    CHECK(c.real("pathloss.exponent") == 2.7);
    CHECK(c.real("pathloss.fixed_loss_db") == 40.0);
    CHECK(c.real("rician.k_factor") == 10.0);
    CHECK(c.real("outage.target") == 1e-3);
    CHECK(c.integer("outage.trials") == 10000);
    CHECK(c.values.size() == schema(Subcommand::outage).size());
}

TEST_CASE("file values, sections and overrides", "[config]")
{
    const std::string text = "# comment\n"
                             "[pathloss]\n"
                             "exponent = 3.1   # inline\n"
                             "\n"
                             "[outage]\n"
                             "densities = 1, 2\n";
    const auto c = parse_config_text(Subcommand::outage, text, "a.cfg", {"pathloss.exponent=3"});
    CHECK(c.real("pathloss.exponent") == 3.0);
    CHECK(c.reals("outage.densities") == std::vector<double>{1.0, 2.0});
    REQUIRE(c.overrides.size() == 1);
    CHECK(c.overrides[0] == "pathloss.exponent=3");

    const auto d = parse_config_text(Subcommand::outage, "pathloss.exponent = 2\n", "b.cfg");
    CHECK(d.real("pathloss.exponent") == 2.0);
}

TEST_CASE("unknown keys name the nearest sibling", "[config]")
{
    CHECK_THROWS_WITH(parse_config_text(Subcommand::outage, "pathloss.exponnet = 3\n", "x.cfg"),
                      ContainsSubstring("x.cfg:1") && ContainsSubstring("pathloss.exponnet") &&
                          ContainsSubstring("pathloss.exponent"));
    CHECK_THROWS_WITH(parse_config_text(Subcommand::deploy, "", "x.cfg", {"deploy.kk=2"}),
                      ContainsSubstring("--set") && ContainsSubstring("deploy.k"));
    CHECK(nearest_key(Subcommand::outage, "rician.kfactor") == "rician.k_factor");
}

TEST_CASE("malformed input is path qualified", "[config]")
{
    CHECK_THROWS_WITH(parse_config_text(Subcommand::cost, "[cost\n", "m.cfg"), ContainsSubstring("m.cfg:1"));
    CHECK_THROWS_WITH(parse_config_text(Subcommand::cost, "\n\njust words\n", "m.cfg"), ContainsSubstring("m.cfg:3"));
    CHECK_THROWS_WITH(parse_config_text(Subcommand::cost, "cost.horizon = 1\ncost.horizon = 2\n", "m.cfg"),
                      ContainsSubstring("m.cfg:2") && ContainsSubstring("duplicate"));
    CHECK_THROWS_WITH(parse_config_text(Subcommand::deploy, "deploy.k = 0\n", "m.cfg"),
                      ContainsSubstring("m.cfg:1") && ContainsSubstring("deploy.k"));
    CHECK_THROWS_WITH(parse_config_text(Subcommand::outage, "outage.trials = many\n", "m.cfg"),
                      ContainsSubstring("outage.trials"));
    CHECK_THROWS_AS(parse_config_text(Subcommand::outage, "", "m.cfg", {"noequals"}), ConfigError);
    CHECK_THROWS_WITH(parse_config(Subcommand::cost, std::filesystem::path("/nonexistent/w.cfg")),
                      ContainsSubstring("/nonexistent/w.cfg"));
}

TEST_CASE("config file on disk", "[config]")
{
    const auto path = std::filesystem::temp_directory_path() / "wetkit_test_config.cfg";
    {
        std::ofstream f(path);
        f << "[cost]\nhorizon = 20\n";
    }
    const auto c = parse_config(Subcommand::cost, path);
    CHECK(c.integer("cost.horizon") == 20);
    CHECK(c.source == path.string());
    std::filesystem::remove(path);
}

TEST_CASE("value parsers", "[config]")
{
    CHECK(parse_real(" 1e-3 ") == 1e-3);
    CHECK_THROWS(parse_real("1.5x"));
    CHECK_THROWS(parse_real("nan"));
    CHECK(parse_integer("42") == 42);
    CHECK_THROWS(parse_integer("4.2"));
    CHECK(parse_bool("true"));
    CHECK_FALSE(parse_bool("false"));
    CHECK(parse_int_list("1-4, 8") == std::vector<int>{1, 2, 3, 4, 8});
    CHECK_THROWS(parse_int_list("4-1"));
    const auto curve = parse_curve("-20:0.1, 0:0.4");
    REQUIRE(curve.breakpoints.size() == 2);
    CHECK(curve.breakpoints[1].efficiency == 0.4);
    CHECK_THROWS(parse_curve("0:0.4, -20:0.1"));
    const auto comps = parse_components("1,2,3,4; 0.5,6,7,8");
    REQUIRE(comps.size() == 2);
    CHECK(comps[1].center == Position2D{6.0, 7.0});
    CHECK(comps[1].width == 8.0);
    CHECK(parse_positions("").empty());
    CHECK(parse_positions("1,2;3,4").size() == 2);
    CHECK_THROWS(parse_positions("1,2,3"));
}

TEST_CASE("csv emission is locale independent and round trips", "[csv]")
{
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(1e-7) == "1e-07");
    CHECK(format_number(std::int64_t{-3}) == "-3");
    CsvWriter w({"a", "b"});
    w.row({"1", "x"}).row({"2", "y"});
    CHECK(w.str() == "a,b\n1,x\n2,y\n");
    CHECK_THROWS(w.row({"only one"}));
    const auto t = parse_csv(w.str());
    CHECK(t.rows.size() == 2);
    CHECK(t.column("b") == 1);
    CHECK_THROWS(t.column("c"));
}

TEST_CASE("manifest round trip", "[manifest]")
{
    RunManifest m;
    m.subcommand = "outage";
    m.seed = 18446744073709551615ull;
    m.workers = 8;
    m.duration_s = 1.25;
    m.config_source = "runs/a.cfg";
    m.overrides = {"pathloss.exponent=3", "outage.trials=100"};
    m.config = {{"pathloss.exponent", "3"}, {"outage.densities", "1,2"}};
    m.outputs = {{"outage.csv", sha256_hex("abc")}};
    const auto back = RunManifest::parse(m.to_text());
    CHECK(back.subcommand == m.subcommand);
    CHECK(back.seed == m.seed);
    CHECK(back.workers == 8);
    CHECK(back.overrides == m.overrides);
    CHECK(back.config == m.config);
    REQUIRE(back.outputs.size() == 1);
    CHECK(back.outputs[0].sha256 == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("plot data", "[plot]")
{
    CHECK_THROWS(emit_plot_data(""));
    const std::string outage = "density,architecture,antennas,trials,outage,ci95\n"
                               "1,single,1,100,0.5,0.1\n2,single,1,100,0.4,0.1\n4,single,1,100,0.1,0.05\n"
                               "1,dc,4,100,0.3,0.1\n2,dc,4,100,0.2,0.1\n4,dc,4,100,0,0\n";
    const auto dat = emit_plot_data(outage);
    CHECK_THAT(dat, ContainsSubstring("# series: single M=1") && ContainsSubstring("# series: dc M=4"));
    CHECK_THAT(dat, ContainsSubstring("[1/m^2]"));
    // two blocks, separated by exactly one double blank line
    std::size_t blocks = 0;
    for (std::size_t pos = 0; (pos = dat.find("# series:", pos)) != std::string::npos; ++pos)
        ++blocks;
    CHECK(blocks == 2);
    CHECK(dat.find("\n\n\n# series: dc") != std::string::npos);

    const std::string rf = "m,tx_power_w,consumption_w,is_optimum\n1,2,7,0\n2,1,4,1\n3,0.8,4.2,0\n";
    const auto rdat = emit_plot_data(rf);
    CHECK_THAT(rdat, ContainsSubstring("# series: consumption") && ContainsSubstring("# series: optimum"));
    CHECK_THAT(rdat, ContainsSubstring("# series: optimum\n# m consumption_w tx_power_w\n2 4 1\n"));
}
