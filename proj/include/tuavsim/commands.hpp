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

#ifndef TUAVSIM_COMMANDS_HPP
#define TUAVSIM_COMMANDS_HPP

#include <iosfwd>
#include <string>

#include "tuavsim/config.hpp"

namespace tuavsim::cli {

/// Runs the distance sweep and writes the CSV to `output_path`. Output is
/// written whole or not at all: a failed write removes the partial file.
void cmd_sweep(const config::ScenarioConfig& cfg,
               const std::string& output_path);

/// Places the UAV per the configured policy for the configured users.
/// Writes the result (keys `position`, `objective`) as JSON to
/// `output_path` and the per-user metrics CSV next to it at
/// `output_path + ".users.csv"`.
void cmd_place(const config::ScenarioConfig& cfg,
               const std::string& output_path);

/// Evaluates one UAV-user link and writes it as a single CSV header+row
/// pair to `out`.
void cmd_link(const config::ScenarioConfig& cfg, const geometry::Point3& uav,
              const geometry::GroundPoint& user, std::ostream& out);

/// cmd_link variant writing to a file, with the same all-or-nothing rule.
void cmd_link_to_file(const config::ScenarioConfig& cfg,
                      const geometry::Point3& uav,
                      const geometry::GroundPoint& user,
                      const std::string& output_path);

} // namespace tuavsim::cli

#endif // TUAVSIM_COMMANDS_HPP
