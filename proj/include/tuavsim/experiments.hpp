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

#ifndef TUAVSIM_EXPERIMENTS_HPP
#define TUAVSIM_EXPERIMENTS_HPP

#include <vector>

#include "tuavsim/channel.hpp"
#include "tuavsim/geometry.hpp"
#include "tuavsim/placement.hpp"

namespace tuavsim::experiments {

/// Inclusive arithmetic range of anchor-to-user ground distances.
struct DistanceRange {
    double start_m = 50.0;
    double stop_m = 1000.0;
    double step_m = 10.0;

    /// Materialized values start, start+step, ... up to stop inclusive.
    std::vector<double> values() const;

    void validate() const;

    bool operator==(const DistanceRange&) const = default;
};

/// How the sweep chooses the UAV azimuth when the placement policy is
/// FixedAngleMaxTether: toward the current user, or a fixed bearing.
struct AzimuthPolicy {
    enum class Kind { TowardUser, Fixed };

    Kind kind = Kind::TowardUser;
    double fixed_deg = 0.0;

    bool operator==(const AzimuthPolicy&) const = default;
};

/// One distance-sweep experiment: tether elevation-angle curves evaluated
/// over a grid of user distances. Each angle is its own constraint
/// scenario and overrides the site's theta_min for that curve.
struct SweepSpec {
    geometry::AnchorSite site{};
    std::vector<double> angles_deg{20.0, 30.0, 60.0};
    DistanceRange distances{};
    channel::EnvironmentProfile env{};
    channel::RadioConfig radio{};
    placement::PlacementPolicy placement{};
    AzimuthPolicy azimuth{};
    channel::LosModel los{};

    void validate() const;
};

/// One emitted table row: the swept tether angle, the anchor-to-user
/// ground distance, the link quantities and the UAV position used.
struct SweepRecord {
    double angle_deg = 0.0;
    double distance_m = 0.0;
    double p_los = 0.0;
    double p_nlos = 0.0;
    double path_loss_db = 0.0;
    double coverage_prob = 0.0;
    geometry::Point3 uav_position{};

    bool operator==(const SweepRecord&) const = default;
};

/// Row-major sweep (angle outer, distance inner): the user sits on the +x
/// axis at each swept ground distance from the anchor, the UAV is placed
/// per the policy at the swept angle, and one record is emitted per pair.
/// Output length is |angles| x |distances|. Any evaluation error aborts
/// the sweep with the offending (angle, distance) named.
std::vector<SweepRecord> run_distance_sweep(const SweepSpec& spec);

/// Fixes the user and sweeps the tether elevation angle at full extension
/// (azimuth toward the user); one record per angle, angles in (0, 90].
std::vector<SweepRecord> run_angle_sweep(const geometry::AnchorSite& site,
                                         const geometry::GroundPoint& user,
                                         const std::vector<double>& angles_deg,
                                         const channel::EnvironmentProfile& env,
                                         const channel::RadioConfig& radio,
                                         const channel::LosModel& los = {});

} // namespace tuavsim::experiments

#endif // TUAVSIM_EXPERIMENTS_HPP
