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

#include "tuavsim/commands.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "tuavsim/csv.hpp"
#include "tuavsim/errors.hpp"

namespace tuavsim::cli {

namespace {

// All-or-nothing file write: a failed write removes the partial file.
void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open output file: " + path);
    }
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
        out.close();
        std::remove(path.c_str());
        throw IoError("failed writing output file: " + path);
    }
}

std::string link_csv(const channel::LinkMetrics& m) {
    std::string out =
        "theta_deg,distance_m,p_los,p_nlos,path_loss_db,coverage_prob\n";
    out += csv::format_number(m.theta_deg);
    out += ',';
    out += csv::format_number(m.distance_m);
    out += ',';
    out += csv::format_number(m.p_los);
    out += ',';
    out += csv::format_number(m.p_nlos);
    out += ',';
    out += csv::format_number(m.path_loss_db);
    out += ',';
    out += csv::format_number(m.coverage_prob);
    out += '\n';
    return out;
}

placement::PlacementResult place_per_policy(const config::ScenarioConfig& cfg) {
    if (cfg.placement.kind == placement::PlacementPolicy::Kind::GridOptimized) {
        return placement::optimize_placement(cfg.site, cfg.users, cfg.env,
                                             cfg.radio,
                                             cfg.placement.resolution_m,
                                             cfg.los);
    }
    // Fixed-angle policy: full extension at the configured operating angle
    // (the site's theta_min) along the policy azimuth.
    const geometry::Point3 pos = placement::place_fixed_angle(
        cfg.site, cfg.site.theta_min_deg, cfg.placement.azimuth_deg);
    placement::PlacementResult result;
    result.position = pos;
    double sum = 0.0;
    for (const auto& user : cfg.users.users) {
        result.per_user.push_back(
            channel::evaluate_link(cfg.env, cfg.radio, pos, user, cfg.los));
        sum += result.per_user.back().coverage_prob;
    }
    result.objective = sum / static_cast<double>(cfg.users.users.size());
    return result;
}

} // namespace

void cmd_sweep(const config::ScenarioConfig& cfg,
               const std::string& output_path) {
    cfg.validate();
    const auto records = experiments::run_distance_sweep(cfg.sweep_spec());
    write_file(output_path, csv::sweep_csv(records));
}

void cmd_place(const config::ScenarioConfig& cfg,
               const std::string& output_path) {
    cfg.validate();
    const placement::PlacementResult result = place_per_policy(cfg);

    nlohmann::ordered_json j;
    j["position"] = {{"x", result.position.x},
                     {"y", result.position.y},
                     {"z", result.position.z}};
    j["objective"] = result.objective;
    write_file(output_path, j.dump(2) + "\n");
    try {
        write_file(output_path + ".users.csv",
                   csv::user_metrics_csv(cfg.users.users, result.per_user));
    } catch (...) {
        std::remove(output_path.c_str()); // no partial output pairs
        throw;
    }
}

void cmd_link(const config::ScenarioConfig& cfg, const geometry::Point3& uav,
              const geometry::GroundPoint& user, std::ostream& out) {
    cfg.validate();
    const channel::LinkMetrics m =
        channel::evaluate_link(cfg.env, cfg.radio, uav, user, cfg.los);
    out << link_csv(m);
    out.flush();
}

void cmd_link_to_file(const config::ScenarioConfig& cfg,
                      const geometry::Point3& uav,
                      const geometry::GroundPoint& user,
                      const std::string& output_path) {
    cfg.validate();
    const channel::LinkMetrics m =
        channel::evaluate_link(cfg.env, cfg.radio, uav, user, cfg.los);
    write_file(output_path, link_csv(m));
}

} // namespace tuavsim::cli
