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

#include "tuavsim/placement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "tuavsim/errors.hpp"

namespace tuavsim::placement {

namespace {

constexpr double kRadPerDeg = std::numbers::pi / 180.0;
constexpr double kMinImprovement = 1e-9;

// One spherical-coordinate candidate relative to the anchor.
struct Candidate {
    double length_m = 0.0;
    double azimuth_deg = 0.0; // normalized to [0, 360)
    double elevation_deg = 0.0;
    geometry::Point3 position{};
    double objective = 0.0;
};

double normalize_azimuth(double deg) {
    double a = std::fmod(deg, 360.0);
    if (a < 0.0) {
        a += 360.0;
    }
    return a;
}

geometry::Point3 spherical_point(const geometry::AnchorSite& site,
                                 double length_m, double azimuth_deg,
                                 double elevation_deg) {
    const double az = azimuth_deg * kRadPerDeg;
    const double el = elevation_deg * kRadPerDeg;
    const double horizontal = length_m * std::cos(el);
    return geometry::Point3{site.position.x + horizontal * std::cos(az),
                            site.position.y + horizontal * std::sin(az),
                            length_m * std::sin(el)};
}

// Mean coverage over the user set; nullopt when some link is degenerate
// (UAV coincident with a ground user at zero altitude).
std::optional<double> objective_at(const geometry::Point3& pos,
                                   const UserSet& users,
                                   const channel::EnvironmentProfile& env,
                                   const channel::RadioConfig& radio,
                                   const channel::LosModel& los) {
    double sum = 0.0;
    for (const auto& user : users.users) {
        try {
            sum += channel::evaluate_link(env, radio, pos, user, los)
                       .coverage_prob;
        } catch (const DomainError&) {
            return std::nullopt;
        }
    }
    return sum / static_cast<double>(users.users.size());
}

// Strict ordering for the argmax reduction: higher objective first, then
// lower altitude, lower azimuth, shorter length. Order-independent.
bool better(const Candidate& a, const Candidate& b) {
    if (a.objective != b.objective) {
        return a.objective > b.objective;
    }
    if (a.position.z != b.position.z) {
        return a.position.z < b.position.z;
    }
    if (a.azimuth_deg != b.azimuth_deg) {
        return a.azimuth_deg < b.azimuth_deg;
    }
    return a.length_m < b.length_m;
}

std::optional<Candidate> make_candidate(const geometry::AnchorSite& site,
                                        const UserSet& users,
                                        const channel::EnvironmentProfile& env,
                                        const channel::RadioConfig& radio,
                                        const channel::LosModel& los,
                                        double length_m, double azimuth_deg,
                                        double elevation_deg) {
    Candidate c;
    c.length_m = length_m;
    c.azimuth_deg = normalize_azimuth(azimuth_deg);
    c.elevation_deg = elevation_deg;
    c.position = spherical_point(site, length_m, c.azimuth_deg, elevation_deg);
    const auto obj = objective_at(c.position, users, env, radio, los);
    if (!obj) {
        return std::nullopt;
    }
    c.objective = *obj;
    return c;
}

void validate_inputs(const geometry::AnchorSite& site, const UserSet& users,
                     const channel::EnvironmentProfile& env,
                     const channel::RadioConfig& radio, double resolution_m,
                     const char* resolution_name) {
    site.validate();
    users.validate();
    env.validate();
    radio.validate();
    if (!std::isfinite(resolution_m) || resolution_m <= 0.0) {
        throw DomainError(std::string(resolution_name) + " must be > 0");
    }
}

void require_tractable_grid(int n_len, int n_el, int n_az,
                            const char* resolution_name) {
    const double points = (n_len + 1.0) * (n_el + 1.0) * n_az;
    if (points > 5e7) {
        throw DomainError(std::string(resolution_name) +
                          " too fine for this region: grid would have " +
                          std::to_string(points) + " points");
    }
}

PlacementResult finalize_result(const Candidate& best, const UserSet& users,
                                const channel::EnvironmentProfile& env,
                                const channel::RadioConfig& radio,
                                const channel::LosModel& los) {
    PlacementResult result;
    result.position = best.position;
    result.per_user.reserve(users.users.size());
    double sum = 0.0;
    for (const auto& user : users.users) {
        result.per_user.push_back(
            channel::evaluate_link(env, radio, best.position, user, los));
        sum += result.per_user.back().coverage_prob;
    }
    result.objective = sum / static_cast<double>(users.users.size());
    return result;
}

} // namespace

void UserSet::validate() const {
    if (users.empty()) {
        throw DomainError("user set must not be empty");
    }
    for (const auto& u : users) {
        if (!std::isfinite(u.x) || !std::isfinite(u.y)) {
            throw DomainError("user coordinates must be finite");
        }
    }
}

void PlacementPolicy::validate() const {
    if (!std::isfinite(azimuth_deg)) {
        throw DomainError("placement.azimuth_deg must be finite");
    }
    if (kind == Kind::GridOptimized &&
        (!std::isfinite(resolution_m) || resolution_m <= 0.0)) {
        throw DomainError("placement.resolution_m must be > 0");
    }
}

geometry::Point3 place_fixed_angle(const geometry::AnchorSite& site,
                                   double elevation_deg, double azimuth_deg) {
    return geometry::tether_tip(site, site.t_max_m, azimuth_deg,
                                elevation_deg);
}

PlacementResult optimize_placement(const geometry::AnchorSite& site,
                                   const UserSet& users,
                                   const channel::EnvironmentProfile& env,
                                   const channel::RadioConfig& radio,
                                   double resolution_m,
                                   const channel::LosModel& los) {
    validate_inputs(site, users, env, radio, resolution_m, "resolution_m");

    const double t_max = site.t_max_m;
    const double el_lo = site.theta_min_deg;
    const double el_span = 90.0 - el_lo;

    const int n_len =
        std::max(1, static_cast<int>(std::ceil(t_max / resolution_m)));
    const int n_el = std::max(
        1, static_cast<int>(
               std::ceil(el_span * kRadPerDeg * t_max / resolution_m)));
    const int n_az = std::max(
        4, static_cast<int>(std::ceil(2.0 * std::numbers::pi * t_max *
                                      std::cos(el_lo * kRadPerDeg) /
                                      resolution_m)));
    require_tractable_grid(n_len, n_el, n_az, "resolution_m");

    // Seed: deterministic spherical grid, endpoints hit exactly.
    std::optional<Candidate> best;
    for (int i = 0; i <= n_len; ++i) {
        const double len =
            (i == n_len) ? t_max : t_max * static_cast<double>(i) / n_len;
        for (int j = 0; j <= n_el; ++j) {
            const double el =
                (j == n_el) ? 90.0
                            : el_lo + el_span * static_cast<double>(j) / n_el;
            for (int k = 0; k < n_az; ++k) {
                const double az = 360.0 * static_cast<double>(k) / n_az;
                auto cand =
                    make_candidate(site, users, env, radio, los, len, az, el);
                if (cand && (!best || better(*cand, *best))) {
                    best = *cand;
                }
            }
        }
    }
    if (!best) {
        throw DomainError("no evaluable position inside the hovering region");
    }

    // Refine: pattern search on the continuous spherical parameters.
    double step_len = t_max / n_len;
    double step_el = el_span / n_el;
    double step_az = 360.0 / n_az;
    const double min_step_len = std::max(t_max * 1e-12, 1e-12);
    const double min_step_ang = 1e-12;

    for (int iter = 0; iter < 500; ++iter) {
        const double obj_before = best->objective;

        const auto try_move = [&](double len, double az, double el) {
            len = std::clamp(len, 0.0, t_max);
            el = std::clamp(el, el_lo, 90.0);
            auto cand = make_candidate(site, users, env, radio, los, len, az,
                                       el);
            if (cand && better(*cand, *best)) {
                best = *cand;
            }
        };

        try_move(best->length_m + step_len, best->azimuth_deg,
                 best->elevation_deg);
        try_move(best->length_m - step_len, best->azimuth_deg,
                 best->elevation_deg);
        try_move(best->length_m, best->azimuth_deg,
                 best->elevation_deg + step_el);
        try_move(best->length_m, best->azimuth_deg,
                 best->elevation_deg - step_el);
        try_move(best->length_m, best->azimuth_deg + step_az,
                 best->elevation_deg);
        try_move(best->length_m, best->azimuth_deg - step_az,
                 best->elevation_deg);

        if (best->objective - obj_before < kMinImprovement) {
            if (step_len <= min_step_len && step_el <= min_step_ang &&
                step_az <= min_step_ang) {
                break;
            }
            step_len = std::max(step_len * 0.5, min_step_len);
            step_el = std::max(step_el * 0.5, min_step_ang);
            step_az = std::max(step_az * 0.5, min_step_ang);
        }
    }

    return finalize_result(*best, users, env, radio, los);
}

PlacementResult brute_force_placement(const geometry::AnchorSite& site,
                                      const UserSet& users,
                                      const channel::EnvironmentProfile& env,
                                      const channel::RadioConfig& radio,
                                      double fine_resolution_m,
                                      const channel::LosModel& los) {
    validate_inputs(site, users, env, radio, fine_resolution_m,
                    "fine_resolution_m");

    const double t_max = site.t_max_m;
    const double el_lo = site.theta_min_deg;
    const double el_span = 90.0 - el_lo;

    // Independent inclusive stepping; no refinement afterwards.
    const int n_len = std::max(
        1, static_cast<int>(std::ceil(t_max / fine_resolution_m)));
    const int n_el = std::max(
        1, static_cast<int>(std::ceil(el_span * kRadPerDeg * t_max /
                                      fine_resolution_m)));
    const int n_az = std::max(
        8, static_cast<int>(std::ceil(2.0 * std::numbers::pi * t_max *
                                      std::cos(el_lo * kRadPerDeg) /
                                      fine_resolution_m)));
    require_tractable_grid(n_len, n_el, n_az, "fine_resolution_m");

    std::optional<Candidate> best;
    for (int i = 0; i <= n_len; ++i) {
        const double len =
            (i == n_len) ? t_max : t_max * static_cast<double>(i) / n_len;
        for (int j = 0; j <= n_el; ++j) {
            const double el =
                (j == n_el) ? 90.0
                            : el_lo + el_span * static_cast<double>(j) / n_el;
            for (int k = 0; k < n_az; ++k) {
                const double az = 360.0 * static_cast<double>(k) / n_az;
                auto cand =
                    make_candidate(site, users, env, radio, los, len, az, el);
                if (cand && (!best || better(*cand, *best))) {
                    best = *cand;
                }
            }
        }
    }
    if (!best) {
        throw DomainError("no evaluable position inside the hovering region");
    }
    return finalize_result(*best, users, env, radio, los);
}

} // namespace tuavsim::placement
