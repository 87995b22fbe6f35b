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

#ifndef TUAVSIM_CONFIG_HPP
#define TUAVSIM_CONFIG_HPP

#include <string>
#include <vector>

#include "tuavsim/channel.hpp"
#include "tuavsim/experiments.hpp"
#include "tuavsim/geometry.hpp"
#include "tuavsim/placement.hpp"

namespace tuavsim::config {

/// One fully resolved scenario: anchor site, environment, radio, sweep and
/// placement settings, and the user devices. Every field has a documented
/// default, so the minimal config file is `{}`.
struct ScenarioConfig {
    geometry::AnchorSite site{};
    channel::EnvironmentProfile env{};
    channel::RadioConfig radio{};
    channel::LosModel los{};
    std::vector<double> angles_deg{20.0, 30.0, 60.0};
    experiments::DistanceRange distances{};
    experiments::AzimuthPolicy azimuth{};
    placement::PlacementPolicy placement{};
    placement::UserSet users{{{300.0, 0.0}}};

    /// Re-validates every module-level invariant; throws DomainError with
    /// the offending field path.
    void validate() const;

    /// SweepSpec assembled from the scenario pieces.
    experiments::SweepSpec sweep_spec() const;

    bool operator==(const ScenarioConfig&) const = default;
};

/// Parses and validates a JSON scenario document. Unknown keys are an
/// error (field path named); missing keys take defaults. The calibration
/// values the model family leaves open (radio.f_c_hz, radio.p_min_dbm,
/// environment.sigma_los_db, environment.sigma_nlos_db) add a note to
/// `warnings` when defaulted. Parse failures report line and column.
ScenarioConfig parse_config(const std::string& json_text,
                            std::vector<std::string>* warnings = nullptr);

/// parse_config over the contents of `path`. Throws IoError when the file
/// cannot be read.
ScenarioConfig load_config(const std::string& path,
                           std::vector<std::string>* warnings = nullptr);

/// Serializes the full resolved scenario (every field explicit) as pretty
/// JSON. load/parse of the result reproduces the config exactly.
std::string serialize_config(const ScenarioConfig& cfg);

} // namespace tuavsim::config

#endif // TUAVSIM_CONFIG_HPP
