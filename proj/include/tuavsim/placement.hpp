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

#ifndef TUAVSIM_PLACEMENT_HPP
#define TUAVSIM_PLACEMENT_HPP

#include <vector>

#include "tuavsim/channel.hpp"
#include "tuavsim/geometry.hpp"

namespace tuavsim::placement {

/// Ground user devices, in a stable order (results are deterministic).
struct UserSet {
    std::vector<geometry::GroundPoint> users;

    /// Throws DomainError when empty or a coordinate is not finite.
    void validate() const;

    bool operator==(const UserSet&) const = default;
};

/// Rule selecting the UAV position inside the hovering region.
/// FixedAngleMaxTether: full tether extension at the operating elevation
/// angle, azimuth from azimuth_deg. GridOptimized: coverage-maximizing
/// search at the given grid resolution (meters of arc spacing).
struct PlacementPolicy {
    enum class Kind { FixedAngleMaxTether, GridOptimized };

    Kind kind = Kind::FixedAngleMaxTether;
    double azimuth_deg = 0.0;  // FixedAngleMaxTether
    double resolution_m = 5.0; // GridOptimized

    void validate() const;

    bool operator==(const PlacementPolicy&) const = default;
};

/// Chosen position, the mean coverage probability it achieves over the
/// user set, and the per-user link metrics behind that mean.
struct PlacementResult {
    geometry::Point3 position{};
    double objective = 0.0;
    std::vector<channel::LinkMetrics> per_user;
};

/// Full tether extension at the given angles. Throws DomainError when
/// elevation_deg is below the site's theta_min.
geometry::Point3 place_fixed_angle(const geometry::AnchorSite& site,
                                   double elevation_deg, double azimuth_deg);

/// Coverage-maximizing position inside the hovering region: a deterministic
/// spherical grid (tether length x azimuth x elevation, spacing derived
/// from resolution_m) seeds a coordinate descent on the continuous
/// parameters, which runs until the objective improves by less than 1e-9.
/// Equal-objective ties are broken by lower altitude, then lower azimuth,
/// then shorter tether length.
PlacementResult optimize_placement(const geometry::AnchorSite& site,
                                   const UserSet& users,
                                   const channel::EnvironmentProfile& env,
                                   const channel::RadioConfig& radio,
                                   double resolution_m,
                                   const channel::LosModel& los = {});

/// Exhaustive argmax over a dense spherical grid covering the region, with
/// the same tie-break rule. No refinement; intended as a slow reference
/// for optimize_placement, so fine_resolution_m should be small enough to
/// give the grid at least ~1000 points on non-degenerate regions.
PlacementResult brute_force_placement(const geometry::AnchorSite& site,
                                      const UserSet& users,
                                      const channel::EnvironmentProfile& env,
                                      const channel::RadioConfig& radio,
                                      double fine_resolution_m,
                                      const channel::LosModel& los = {});

} // namespace tuavsim::placement

#endif // TUAVSIM_PLACEMENT_HPP
