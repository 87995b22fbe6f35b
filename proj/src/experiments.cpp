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

#include "tuavsim/experiments.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tuavsim/errors.hpp"

namespace tuavsim::experiments {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

void require_curve_angle(double angle_deg) {
    if (!std::isfinite(angle_deg) || angle_deg <= 0.0 || angle_deg > 90.0) {
        throw DomainError("tether elevation angle " +
                          std::to_string(angle_deg) + " outside (0, 90]");
    }
}

double bearing_deg(const geometry::GroundPoint& from,
                   const geometry::GroundPoint& to) {
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    if (dx == 0.0 && dy == 0.0) {
        return 0.0;
    }
    return std::atan2(dy, dx) * kDegPerRad;
}

// Each swept angle is its own constraint scenario: it becomes the curve's
// minimum tether elevation angle.
geometry::AnchorSite curve_site(const geometry::AnchorSite& site,
                                double angle_deg) {
    geometry::AnchorSite s = site;
    s.theta_min_deg = angle_deg;
    return s;
}

geometry::Point3 place_for_curve(const geometry::AnchorSite& site,
                                 double angle_deg,
                                 const geometry::GroundPoint& user,
                                 const SweepSpec& spec) {
    const geometry::AnchorSite scenario = curve_site(site, angle_deg);
    if (spec.placement.kind == placement::PlacementPolicy::Kind::GridOptimized) {
        return placement::optimize_placement(scenario, {{user}}, spec.env,
                                             spec.radio,
                                             spec.placement.resolution_m,
                                             spec.los)
            .position;
    }
    const double az = spec.azimuth.kind == AzimuthPolicy::Kind::TowardUser
                          ? bearing_deg(site.position, user)
                          : spec.azimuth.fixed_deg;
    return geometry::tether_tip(scenario, scenario.t_max_m, az, angle_deg);
}

} // namespace

std::vector<double> DistanceRange::values() const {
    validate();
    const int n = static_cast<int>(
        std::floor((stop_m - start_m) / step_m + 1e-9));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        out.push_back(start_m + step_m * static_cast<double>(i));
    }
    return out;
}

void DistanceRange::validate() const {
    if (!std::isfinite(start_m) || !std::isfinite(stop_m) ||
        !std::isfinite(step_m)) {
        throw DomainError("distance range values must be finite");
    }
    if (start_m <= 0.0) {
        throw DomainError("distances.start_m must be > 0");
    }
    if (step_m <= 0.0) {
        throw DomainError("distances.step_m must be > 0");
    }
    if (stop_m < start_m) {
        throw DomainError("distances.stop_m must be >= start_m");
    }
}

void SweepSpec::validate() const {
    site.validate();
    distances.validate();
    env.validate();
    radio.validate();
    placement.validate();
    if (los.kind == channel::LosModel::Kind::PowerLaw) {
        los.powerlaw.validate();
    }
    for (const double a : angles_deg) {
        require_curve_angle(a);
    }
    if (!std::isfinite(azimuth.fixed_deg)) {
        throw DomainError("azimuth.fixed_deg must be finite");
    }
}

std::vector<SweepRecord> run_distance_sweep(const SweepSpec& spec) {
    spec.validate();
    const std::vector<double> distances = spec.distances.values();

    std::vector<SweepRecord> records;
    records.reserve(spec.angles_deg.size() * distances.size());
    for (const double angle : spec.angles_deg) {
        for (const double dist : distances) {
            const geometry::GroundPoint user{spec.site.position.x + dist,
                                             spec.site.position.y};
            try {
                const geometry::Point3 uav =
                    place_for_curve(spec.site, angle, user, spec);
                const channel::LinkMetrics m = channel::evaluate_link(
                    spec.env, spec.radio, uav, user, spec.los);
                records.push_back(SweepRecord{angle, dist, m.p_los, m.p_nlos,
                                              m.path_loss_db, m.coverage_prob,
                                              uav});
            } catch (const DomainError& e) {
                throw DomainError("sweep failed at angle=" +
                                  std::to_string(angle) + " deg, distance=" +
                                  std::to_string(dist) + " m: " + e.what());
            }
        }
    }
    return records;
}

std::vector<SweepRecord> run_angle_sweep(const geometry::AnchorSite& site,
                                         const geometry::GroundPoint& user,
                                         const std::vector<double>& angles_deg,
                                         const channel::EnvironmentProfile& env,
                                         const channel::RadioConfig& radio,
                                         const channel::LosModel& los) {
    site.validate();
    env.validate();
    radio.validate();
    for (const double a : angles_deg) {
        require_curve_angle(a);
    }

    const double ground_dist =
        std::hypot(user.x - site.position.x, user.y - site.position.y);
    const double az = bearing_deg(site.position, user);

    std::vector<SweepRecord> records;
    records.reserve(angles_deg.size());
    for (const double angle : angles_deg) {
        try {
            const geometry::AnchorSite scenario = curve_site(site, angle);
            const geometry::Point3 uav =
                geometry::tether_tip(scenario, scenario.t_max_m, az, angle);
            const channel::LinkMetrics m =
                channel::evaluate_link(env, radio, uav, user, los);
            records.push_back(SweepRecord{angle, ground_dist, m.p_los,
                                          m.p_nlos, m.path_loss_db,
                                          m.coverage_prob, uav});
        } catch (const DomainError& e) {
            throw DomainError("angle sweep failed at angle=" +
                              std::to_string(angle) + " deg: " + e.what());
        }
    }
    return records;
}

} // namespace tuavsim::experiments
