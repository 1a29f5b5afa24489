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

#include "wet/beam_power.hpp"
#include "wet/cli/config.hpp"
#include "wet/cli/manifest.hpp"
#include "wet/deployment.hpp"
#include "wet/outage.hpp"
#include "wet/techno_econ.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace wet::cli
{
    struct RunConfig
    {
        Subcommand subcommand = Subcommand::cost;
        std::uint64_t seed = 0;
        std::optional<std::filesystem::path> config_path;
        std::filesystem::path output_dir = ".";
        std::vector<std::string> overrides;
        std::optional<std::uint64_t> trials; // shorthand for outage.trials
        unsigned workers = 1;
    };

    ResolvedConfig resolve(const RunConfig &run);

    // Typed views of a resolved config. Cross-key problems raise ConfigError.
    CostParams cost_params(const ResolvedConfig &cfg);
    DeploymentProblem deploy_problem(const ResolvedConfig &cfg, std::uint64_t seed);
    SolverConfig deploy_solver(const ResolvedConfig &cfg, unsigned workers);
    OutageConfig outage_config(const ResolvedConfig &cfg, std::uint64_t seed);
    BeaconScenario beacon_scenario(const ResolvedConfig &cfg, std::uint64_t seed);

    // CSV payloads, one per experiment.
    //   cost:     scenario,n_devices,horizon,battery_life,device_install,device_maintenance,pb_install,pb_opex,total
    //   deploy:   kind,index,x,y,power_w   (kind = pb | device | min)
    //   outage:   density,architecture,antennas,trials,outage,ci95
    //   rfchains: m,tx_power_w,consumption_w,is_optimum
    std::string experiment_csv(const ResolvedConfig &cfg, std::uint64_t seed, unsigned workers);

    struct GeneratedFile
    {
        std::string name;
        std::string content;
    };

    // CSV plus its plot data, without touching the filesystem.
    std::vector<GeneratedFile> generate(const ResolvedConfig &cfg, std::uint64_t seed, unsigned workers);

    // Writes <subcommand>.csv, <subcommand>.dat and manifest.txt into run.output_dir.
    // Nothing is left behind on failure.
    RunManifest run(const RunConfig &run);

    struct VerifyReport
    {
        bool ok = true;
        std::vector<std::string> messages;
    };

    // Checks the recorded digests against the files next to the manifest, then regenerates the
    // outputs from the manifest's resolved config and seed and compares digests again.
    VerifyReport verify(const std::filesystem::path &manifest_path, unsigned workers = 1);
}
