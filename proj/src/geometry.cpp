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

#include "tuavsim/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tuavsim/errors.hpp"

namespace tuavsim::geometry {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;
constexpr double kRadPerDeg = std::numbers::pi / 180.0;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

void require_finite(const GroundPoint& p, const char* what) {
    require_finite(p.x, what);
    require_finite(p.y, what);
}

void require_finite(const Point3& p, const char* what) {
    require_finite(p.x, what);
    require_finite(p.y, what);
    require_finite(p.z, what);
    if (p.z < 0.0) {
        throw DomainError(std::string(what) + ": altitude must be >= 0");
    }
}

} // namespace

void AnchorSite::validate() const {
    require_finite(position, "anchor position");
    require_finite(t_max_m, "t_max_m");
    require_finite(theta_min_deg, "theta_min_deg");
    if (t_max_m <= 0.0) {
        throw DomainError("t_max_m must be > 0");
    }
    if (theta_min_deg <= 0.0 || theta_min_deg > 90.0) {
        throw DomainError("theta_min_deg must be in (0, 90]");
    }
}

double distance_3d(const Point3& uav, const GroundPoint& user) {
    require_finite(uav, "uav");
    require_finite(user, "user");
    const double dx = uav.x - user.x;
    const double dy = uav.y - user.y;
    return std::sqrt(dx * dx + dy * dy + uav.z * uav.z);
}

double elevation_angle_deg(const GroundPoint& observer, const Point3& target) {
    require_finite(observer, "observer");
    require_finite(target, "target");
    const double dx = target.x - observer.x;
    const double dy = target.y - observer.y;
    const double horizontal = std::hypot(dx, dy);
    if (horizontal == 0.0) {
        if (target.z == 0.0) {
            throw DomainError(
                "elevation angle undefined: target coincides with observer");
        }
        return 90.0;
    }
    return std::atan2(target.z, horizontal) * kDegPerRad;
}

bool region_contains(const AnchorSite& site, const Point3& p) {
    site.validate();
    require_finite(p, "point");
    const double dx = p.x - site.position.x;
    const double dy = p.y - site.position.y;
    const double dist = std::sqrt(dx * dx + dy * dy + p.z * p.z);
    if (dist > site.t_max_m + kRegionBoundaryTol) {
        return false;
    }
    if (dist == 0.0) {
        return true; // anchor ground point: the angle condition is vacuous
    }
    const double angle = elevation_angle_deg(site.position, p);
    return angle >= site.theta_min_deg - kRegionBoundaryTol;
}

Point3 tether_tip(const AnchorSite& site, double length_m, double azimuth_deg,
                  double elevation_deg) {
    site.validate();
    require_finite(length_m, "length_m");
    require_finite(azimuth_deg, "azimuth_deg");
    require_finite(elevation_deg, "elevation_deg");
    if (length_m < 0.0 || length_m > site.t_max_m) {
        throw DomainError("tether length " + std::to_string(length_m) +
                          " outside [0, " + std::to_string(site.t_max_m) + "]");
    }
    if (elevation_deg < site.theta_min_deg || elevation_deg > 90.0) {
        throw DomainError("elevation " + std::to_string(elevation_deg) +
                          " outside [" + std::to_string(site.theta_min_deg) +
                          ", 90]");
    }
    const double az = azimuth_deg * kRadPerDeg;
    const double el = elevation_deg * kRadPerDeg;
    const double horizontal = length_m * std::cos(el);
    return Point3{site.position.x + horizontal * std::cos(az),
                  site.position.y + horizontal * std::sin(az),
                  length_m * std::sin(el)};
}

} // namespace tuavsim::geometry
