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

#include "tuavsim/csv.hpp"

#include <cstdio>

#include "tuavsim/errors.hpp"

namespace tuavsim::csv {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string sweep_csv(const std::vector<experiments::SweepRecord>& records) {
    std::string out = kSweepHeader;
    out += '\n';
    for (const auto& r : records) {
        out += format_number(r.angle_deg);
        out += ',';
        out += format_number(r.distance_m);
        out += ',';
        out += format_number(r.p_los);
        out += ',';
        out += format_number(r.p_nlos);
        out += ',';
        out += format_number(r.path_loss_db);
        out += ',';
        out += format_number(r.coverage_prob);
        out += ',';
        out += format_number(r.uav_position.x);
        out += ',';
        out += format_number(r.uav_position.y);
        out += ',';
        out += format_number(r.uav_position.z);
        out += '\n';
    }
    return out;
}

std::string user_metrics_csv(
    const std::vector<geometry::GroundPoint>& users,
    const std::vector<channel::LinkMetrics>& metrics) {
    if (users.size() != metrics.size()) {
        throw DomainError("user list and metrics list differ in length");
    }
    std::string out = kUserMetricsHeader;
    out += '\n';
    for (std::size_t i = 0; i < users.size(); ++i) {
        const auto& m = metrics[i];
        out += format_number(users[i].x);
        out += ',';
        out += format_number(users[i].y);
        out += ',';
        out += format_number(m.theta_deg);
        out += ',';
        out += format_number(m.distance_m);
        out += ',';
        out += format_number(m.p_los);
        out += ',';
        out += format_number(m.p_nlos);
        out += ',';
        out += format_number(m.path_loss_db);
        out += ',';
        out += format_number(m.coverage_prob);
        out += '\n';
    }
    return out;
}

} // namespace tuavsim::csv
