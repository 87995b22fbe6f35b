// Copyright 2026 TUAVSim Project Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tuavsim/commands.hpp"
#include "tuavsim/config.hpp"
#include "tuavsim/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIo = 2;

// Every run logs the fully resolved parameter set so outputs are
// self-describing.
tuavsim::config::ScenarioConfig load_and_log(const std::string& config_path) {
    std::vector<std::string> warnings;
    auto cfg = tuavsim::config::load_config(config_path, &warnings);
    for (const auto& w : warnings) {
        std::cerr << "warning: " << w << "\n";
    }
    std::cerr << "resolved configuration:\n"
              << tuavsim::config::serialize_config(cfg);
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tethered-UAV aerial base station coverage simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string sweep_output;
    std::string place_output;
    std::string link_output;
    std::vector<double> uav_coords;
    std::vector<double> user_coords;

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Run the distance sweep and write its CSV table");
    sweep->add_option("--config", config_path, "Scenario JSON file")
        ->required();
    sweep->add_option("--output", sweep_output, "Output CSV path")->required();

    CLI::App* place = app.add_subcommand(
        "place", "Place the UAV for the configured users");
    place->add_option("--config", config_path, "Scenario JSON file")
        ->required();
    place
        ->add_option("--output", place_output,
                     "Output JSON path (per-user CSV lands next to it)")
        ->required();

    CLI::App* link = app.add_subcommand(
        "link", "Evaluate a single UAV-user link");
    link->add_option("--config", config_path, "Scenario JSON file")
        ->required();
    link->add_option("--uav", uav_coords, "UAV position x,y,z (meters)")
        ->required()
        ->delimiter(',')
        ->expected(3);
    link->add_option("--user", user_coords, "User position x,y (meters)")
        ->required()
        ->delimiter(',')
        ->expected(2);
    link->add_option("--output", link_output,
                     "Output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitDomain;
    }

    try {
        const auto cfg = load_and_log(config_path);
        if (sweep->parsed()) {
            tuavsim::cli::cmd_sweep(cfg, sweep_output);
        } else if (place->parsed()) {
            tuavsim::cli::cmd_place(cfg, place_output);
        } else if (link->parsed()) {
            const tuavsim::geometry::Point3 uav{uav_coords[0], uav_coords[1],
                                                uav_coords[2]};
            const tuavsim::geometry::GroundPoint user{user_coords[0],
                                                      user_coords[1]};
            if (link_output.empty()) {
                tuavsim::cli::cmd_link(cfg, uav, user, std::cout);
            } else {
                tuavsim::cli::cmd_link_to_file(cfg, uav, user, link_output);
            }
        }
    } catch (const tuavsim::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const tuavsim::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}
