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

#ifndef TUAVSIM_GEOMETRY_HPP
#define TUAVSIM_GEOMETRY_HPP

namespace tuavsim::geometry {

/// Ground position (user device or tether anchor), meters.
struct GroundPoint {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const GroundPoint&) const = default;
};

/// UAV position, meters. Altitude z is measured above the ground plane.
struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    bool operator==(const Point3&) const = default;
};

/// Tether ground node: anchor position, maximum tether length and the
/// minimum elevation angle the tether may make with the ground plane.
struct AnchorSite {
    GroundPoint position{};
    double t_max_m = 100.0;
    double theta_min_deg = 20.0;

    /// Throws DomainError unless t_max > 0 and theta_min in (0, 90].
    void validate() const;

    bool operator==(const AnchorSite&) const = default;
};

/// Boundary comparisons in region_contains allow this much slack so that
/// full-extension points built from spherical parameters stay inside
/// despite rounding. Meters on the length check, degrees on the angle check.
inline constexpr double kRegionBoundaryTol = 1e-9;

/// 3-D distance between a UAV and a ground point:
/// sqrt((xj-xk)^2 + (yj-yk)^2 + zj^2).
double distance_3d(const Point3& uav, const GroundPoint& user);

/// Elevation angle of `target` seen from `observer`, in degrees in [0, 90].
/// Exactly 90 when the target is directly overhead. Throws DomainError for
/// the coincident zero-altitude case, where the angle is undefined.
double elevation_angle_deg(const GroundPoint& observer, const Point3& target);

/// True iff `p` lies in the tether hovering region: within t_max meters of
/// the anchor ground position and at an elevation angle (seen from the
/// anchor) of at least theta_min. Boundary points are inside; the anchor
/// ground point itself is inside (its angle condition is vacuous).
bool region_contains(const AnchorSite& site, const Point3& p);

/// Point at the given spherical offset from the anchor: `length` meters of
/// tether at `elevation_deg` above the ground plane, `azimuth_deg`
/// counterclockwise from +x. Throws DomainError when length is outside
/// [0, t_max] or elevation outside [theta_min, 90]. The result always
/// satisfies region_contains.
Point3 tether_tip(const AnchorSite& site, double length_m, double azimuth_deg,
                  double elevation_deg);

} // namespace tuavsim::geometry

#endif // TUAVSIM_GEOMETRY_HPP
