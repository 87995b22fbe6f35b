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

#include "tuavsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tuavsim/errors.hpp"

namespace tuavsim::channel {

namespace {

constexpr double kSpeedOfLight = 299792458.0; // m/s
constexpr double kRadPerDeg = std::numbers::pi / 180.0;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

void require_theta_range(double theta_deg) {
    require_finite(theta_deg, "theta_deg");
    if (theta_deg < 0.0 || theta_deg > 90.0) {
        throw DomainError("elevation angle " + std::to_string(theta_deg) +
                          " outside [0, 90]");
    }
}

// Excess-loss mixture on top of free-space loss, all in dB.
double mixture_path_loss_db(const EnvironmentProfile& env, double fspl,
                            double p_los_value) {
    return fspl + p_los_value * env.mu_los_db +
           (1.0 - p_los_value) * env.mu_nlos_db;
}

// Threshold-form coverage for a known LoS probability and free-space loss.
double coverage_from(const EnvironmentProfile& env, const RadioConfig& radio,
                     double p_los_value, double fspl) {
    const double budget = radio.p_min_dbm + fspl - radio.p_t_dbm - radio.g_db;
    const double q_los = q_function((budget + env.mu_los_db) / env.sigma_los_db);
    const double q_nlos =
        q_function((budget + env.mu_nlos_db) / env.sigma_nlos_db);
    return p_los_value * q_los + (1.0 - p_los_value) * q_nlos;
}

} // namespace

void EnvironmentProfile::validate() const {
    require_finite(a, "environment.a");
    require_finite(b, "environment.b");
    require_finite(mu_los_db, "environment.mu_los_db");
    require_finite(mu_nlos_db, "environment.mu_nlos_db");
    require_finite(sigma_los_db, "environment.sigma_los_db");
    require_finite(sigma_nlos_db, "environment.sigma_nlos_db");
    if (a <= 0.0 || b <= 0.0) {
        throw DomainError("environment: a and b must be > 0");
    }
    if (mu_los_db < 0.0 || mu_nlos_db < mu_los_db) {
        throw DomainError(
            "environment: need mu_nlos_db >= mu_los_db >= 0");
    }
    if (sigma_los_db <= 0.0 || sigma_nlos_db <= 0.0) {
        throw DomainError("environment: shadowing spreads must be > 0");
    }
}

void PowerLawLosParams::validate() const {
    require_finite(a2, "power-law a2");
    require_finite(b2, "power-law b2");
    if (a2 <= 0.0 || b2 <= 0.0) {
        throw DomainError("power-law LoS parameters must be > 0");
    }
}

void RadioConfig::validate() const {
    require_finite(f_c_hz, "radio.f_c_hz");
    require_finite(p_t_dbm, "radio.p_t_dbm");
    require_finite(g_db, "radio.g_db");
    require_finite(p_min_dbm, "radio.p_min_dbm");
    require_finite(noise_dbm, "radio.noise_dbm");
    require_finite(bandwidth_hz, "radio.bandwidth_hz");
    if (f_c_hz <= 0.0) {
        throw DomainError("radio.f_c_hz must be > 0");
    }
    if (bandwidth_hz <= 0.0) {
        throw DomainError("radio.bandwidth_hz must be > 0");
    }
}

double LosModel::p_los(const EnvironmentProfile& env, double theta_deg) const {
    switch (kind) {
    case Kind::PowerLaw:
        return p_los_powerlaw(powerlaw, theta_deg);
    case Kind::Sigmoid:
    default:
        return p_los_sigmoid(env, theta_deg);
    }
}

double p_los_sigmoid(const EnvironmentProfile& env, double theta_deg) {
    env.validate();
    require_theta_range(theta_deg);
    return 1.0 / (1.0 + env.a * std::exp(-env.b * (theta_deg - env.a)));
}

double p_nlos(double p_los) {
    require_finite(p_los, "p_los");
    if (p_los < 0.0 || p_los > 1.0) {
        throw DomainError("p_los outside [0, 1]");
    }
    return 1.0 - p_los;
}

double p_los_powerlaw(const PowerLawLosParams& params, double theta_deg) {
    params.validate();
    require_theta_range(theta_deg);
    const double theta_rad = theta_deg * kRadPerDeg;
    return std::clamp(params.a2 * std::pow(theta_rad, params.b2), 0.0, 1.0);
}

double p_los_powerlaw(const PowerLawLosParams& params,
                      const geometry::Point3& uav,
                      const geometry::GroundPoint& user) {
    return p_los_powerlaw(params, geometry::elevation_angle_deg(user, uav));
}

double fspl_db(double f_c_hz, double distance_m) {
    require_finite(f_c_hz, "f_c_hz");
    require_finite(distance_m, "distance_m");
    if (f_c_hz <= 0.0 || distance_m <= 0.0) {
        throw DomainError("fspl_db requires positive frequency and distance");
    }
    return 20.0 *
           std::log10(4.0 * std::numbers::pi * f_c_hz * distance_m /
                      kSpeedOfLight);
}

double mean_path_loss_db(const EnvironmentProfile& env,
                         const RadioConfig& radio, double theta_deg,
                         double distance_m) {
    radio.validate();
    const double p = p_los_sigmoid(env, theta_deg);
    return mixture_path_loss_db(env, fspl_db(radio.f_c_hz, distance_m), p);
}

double q_function(double x) {
    require_finite(x, "x");
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double coverage_probability(const EnvironmentProfile& env,
                            const RadioConfig& radio, double theta_deg,
                            double distance_m) {
    radio.validate();
    const double p = p_los_sigmoid(env, theta_deg);
    return coverage_from(env, radio, p, fspl_db(radio.f_c_hz, distance_m));
}

LinkMetrics evaluate_link(const EnvironmentProfile& env,
                          const RadioConfig& radio, const geometry::Point3& uav,
                          const geometry::GroundPoint& user,
                          const LosModel& los) {
    env.validate();
    radio.validate();
    const double theta = geometry::elevation_angle_deg(user, uav);
    const double dist = geometry::distance_3d(uav, user);
    if (dist <= 0.0) {
        throw DomainError("link distance must be > 0");
    }
    const double p = los.p_los(env, theta);
    const double fspl = fspl_db(radio.f_c_hz, dist);
    LinkMetrics m;
    m.theta_deg = theta;
    m.distance_m = dist;
    m.p_los = p;
    m.p_nlos = 1.0 - p;
    m.path_loss_db = mixture_path_loss_db(env, fspl, p);
    m.coverage_prob = coverage_from(env, radio, p, fspl);
    return m;
}

} // namespace tuavsim::channel
