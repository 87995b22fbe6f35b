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

#ifndef TUAVSIM_CHANNEL_HPP
#define TUAVSIM_CHANNEL_HPP

#include "tuavsim/geometry.hpp"

namespace tuavsim::channel {

/// Air-to-ground propagation environment: sigmoid LoS-probability curve
/// parameters and state-specific excess losses / shadowing spreads in dB.
/// Defaults are the urban profile.
struct EnvironmentProfile {
    double a = 10.6;
    double b = 0.18;
    double mu_los_db = 1.0;
    double mu_nlos_db = 20.0;
    double sigma_los_db = 8.0;
    double sigma_nlos_db = 8.0;

    void validate() const;

    bool operator==(const EnvironmentProfile&) const = default;
};

/// Coefficients of the power-law LoS model: p = a2 * theta_rad ^ b2,
/// clamped to [0, 1]. Kept separate from the sigmoid parameters.
struct PowerLawLosParams {
    double a2 = 1.0;
    double b2 = 1.0;

    void validate() const;

    bool operator==(const PowerLawLosParams&) const = default;
};

/// Link-budget configuration. Noise power and bandwidth are carried for
/// completeness; the threshold-form coverage probability does not use them.
struct RadioConfig {
    double f_c_hz = 2.0e9;
    double p_t_dbm = 40.0; // 10 W
    double g_db = 3.0;
    double p_min_dbm = -90.0;
    double noise_dbm = -174.0;
    double bandwidth_hz = 5.0e6;

    void validate() const;

    bool operator==(const RadioConfig&) const = default;
};

/// All channel quantities for one UAV-user link, computed from a single
/// (elevation angle, distance) pair. p_los + p_nlos == 1 by construction.
struct LinkMetrics {
    double theta_deg = 0.0;
    double distance_m = 0.0;
    double p_los = 0.0;
    double p_nlos = 0.0;
    double path_loss_db = 0.0;
    double coverage_prob = 0.0;

    bool operator==(const LinkMetrics&) const = default;
};

/// Which LoS-probability model evaluate_link and the sweep harness use.
/// The sigmoid is the default; the power law is selectable.
struct LosModel {
    enum class Kind { Sigmoid, PowerLaw };

    Kind kind = Kind::Sigmoid;
    PowerLawLosParams powerlaw{};

    /// LoS probability at the given user elevation angle under this model.
    double p_los(const EnvironmentProfile& env, double theta_deg) const;

    bool operator==(const LosModel&) const = default;
};

/// Sigmoid LoS probability 1 / (1 + a exp(-b (theta - a))), theta in
/// degrees. Strictly increasing on [0, 90]; throws DomainError outside.
double p_los_sigmoid(const EnvironmentProfile& env, double theta_deg);

/// NLoS complement 1 - p_los. Throws DomainError outside [0, 1].
double p_nlos(double p_los);

/// Power-law LoS probability at a known elevation angle (degrees).
double p_los_powerlaw(const PowerLawLosParams& params, double theta_deg);

/// Power-law LoS probability for a geometric link; the elevation angle is
/// taken at the user toward the UAV.
double p_los_powerlaw(const PowerLawLosParams& params,
                      const geometry::Point3& uav,
                      const geometry::GroundPoint& user);

/// Free-space path loss 20 log10(4 pi f d / c) in dB, c = 299792458 m/s.
double fspl_db(double f_c_hz, double distance_m);

/// Mean path loss in dB: FSPL plus the LoS/NLoS excess-loss mixture
/// weighted by the sigmoid LoS probability at theta_deg.
double mean_path_loss_db(const EnvironmentProfile& env,
                         const RadioConfig& radio, double theta_deg,
                         double distance_m);

/// Gaussian tail probability Q(x) = P(N(0,1) > x).
double q_function(double x);

/// Downlink coverage probability: the LoS/NLoS mixture of
/// Q((P_min + FSPL(d) + mu_s - p_t - G) / sigma_s), weighted by the sigmoid
/// LoS probability at theta_deg.
double coverage_probability(const EnvironmentProfile& env,
                            const RadioConfig& radio, double theta_deg,
                            double distance_m);

/// Full metrics for one UAV-user link. Elevation angle and 3-D distance
/// come from the geometry module; every channel quantity is derived from
/// that same (theta, d) pair.
LinkMetrics evaluate_link(const EnvironmentProfile& env,
                          const RadioConfig& radio, const geometry::Point3& uav,
                          const geometry::GroundPoint& user,
                          const LosModel& los = {});

} // namespace tuavsim::channel

#endif // TUAVSIM_CHANNEL_HPP
