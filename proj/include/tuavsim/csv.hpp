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

#ifndef TUAVSIM_CSV_HPP
#define TUAVSIM_CSV_HPP

#include <string>
#include <vector>

#include "tuavsim/channel.hpp"
#include "tuavsim/experiments.hpp"
#include "tuavsim/geometry.hpp"

namespace tuavsim::csv {

/// Fixed sweep CSV header.
inline constexpr const char* kSweepHeader =
    "angle_deg,distance_m,p_los,p_nlos,path_loss_db,coverage_prob,"
    "uav_x,uav_y,uav_z";

/// Fixed per-user placement CSV header.
inline constexpr const char* kUserMetricsHeader =
    "user_x,user_y,theta_deg,distance_m,p_los,p_nlos,path_loss_db,"
    "coverage_prob";

/// Number rendered with 9 significant digits ("%.9g"), locale-independent.
std::string format_number(double v);

/// Sweep records as CSV text: header row plus one row per record, in
/// record order, numbers at 9 significant digits.
std::string sweep_csv(const std::vector<experiments::SweepRecord>& records);

/// Per-user link metrics as CSV text, rows in user order.
std::string user_metrics_csv(
    const std::vector<geometry::GroundPoint>& users,
    const std::vector<channel::LinkMetrics>& metrics);

} // namespace tuavsim::csv

#endif // TUAVSIM_CSV_HPP
