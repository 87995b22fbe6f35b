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

// End-to-end verification suite. Runs every release gate and prints one
// PASS/FAIL line per criterion; exits nonzero when any gate fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tuavsim/channel.hpp"
#include "tuavsim/commands.hpp"
#include "tuavsim/config.hpp"
#include "tuavsim/csv.hpp"
#include "tuavsim/errors.hpp"
#include "tuavsim/experiments.hpp"
#include "tuavsim/geometry.hpp"
#include "tuavsim/placement.hpp"

using namespace tuavsim;

namespace {

int g_failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", id,
                name, detail.empty() ? "" : " | ", detail.c_str());
    std::fflush(stdout);
    if (!ok) {
        ++g_failures;
    }
}

template <typename Fn>
void run_criterion(int id, const char* name, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        report(id, name, false, std::string("exception: ") + e.what());
    }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t0)
        .count();
}

std::string fmt(double v) { return csv::format_number(v); }

const channel::EnvironmentProfile kUrban{};
const channel::RadioConfig kRadio{};

// 1. LoS/NLoS complementarity over random angles.
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> theta(0.0, 90.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double p = channel::p_los_sigmoid(kUrban, theta(rng));
        worst = std::max(worst, std::fabs(p + channel::p_nlos(p) - 1.0));
    }
    const double elapsed = seconds_since(t0);
    report(1, "LoS/NLoS complementarity", worst <= 1e-12 && elapsed < 1.0,
           "max |p_los + p_nlos - 1| = " + fmt(worst) + ", " + fmt(elapsed) +
               " s");
}

// 2. Sigmoid anchor point: exponent vanishes at theta == a.
void criterion_2() {
    const double err =
        std::fabs(channel::p_los_sigmoid(kUrban, 10.6) - 1.0 / 11.6);
    report(2, "sigmoid anchor point p(10.6) = 1/11.6", err <= 1e-12,
           "|error| = " + fmt(err));
}

// 3. FSPL laws: zero point and the distance-doubling increment.
void criterion_3() {
    constexpr double c = 299792458.0;
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> freq(0.1e9, 30.0e9);
    std::uniform_real_distribution<double> dist(1.0, 5000.0);
    double worst_zero = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double f = freq(rng);
        const double d0 = c / (4.0 * std::numbers::pi * f);
        worst_zero = std::max(worst_zero, std::fabs(channel::fspl_db(f, d0)));
    }
    const double increment = 20.0 * std::log10(2.0);
    double worst_double = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double f = freq(rng);
        const double d = dist(rng);
        worst_double = std::max(
            worst_double, std::fabs(channel::fspl_db(f, 2.0 * d) -
                                    channel::fspl_db(f, d) - increment));
    }
    report(3, "FSPL zero point and doubling law",
           worst_zero <= 1e-9 && worst_double <= 1e-9,
           "|zero| = " + fmt(worst_zero) + ", |doubling| = " +
               fmt(worst_double));
}

// 4. Q-function accuracy against the quadrature reference.
void criterion_4() {
    double worst = 0.0;
    for (int i = 0; i <= 1600; ++i) {
        const double x = -8.0 + 0.01 * i;
        worst = std::max(worst, std::fabs(channel::q_function(x) -
                                          oracles::normal_tail(x)));
    }
    const double zero_err = std::fabs(channel::q_function(0.0) - 0.5);
    report(4, "Q-function accuracy on [-8, 8]",
           worst <= 1e-10 && zero_err <= 1e-15,
           "max |error| = " + fmt(worst) + ", |Q(0) - 0.5| = " +
               fmt(zero_err));
}

// 5. Region membership against the inequality-pair reference, and
// containment of every spherical-parameter point.
void criterion_5() {
    const geometry::AnchorSite site{{7.0, -3.0}, 120.0, 25.0};
    std::mt19937 rng(105);
    std::uniform_real_distribution<double> dxy(-120.0, 120.0);
    std::uniform_real_distribution<double> dz(0.0, 120.0);
    int disagreements = 0;
    for (int i = 0; i < 10000; ++i) {
        const geometry::Point3 p{site.position.x + dxy(rng),
                                 site.position.y + dxy(rng), dz(rng)};
        if (geometry::region_contains(site, p) !=
            oracles::region_contains(site, p)) {
            ++disagreements;
        }
    }
    std::uniform_real_distribution<double> len(0.0, 120.0);
    std::uniform_real_distribution<double> az(-360.0, 720.0);
    std::uniform_real_distribution<double> el(25.0, 90.0);
    int escapes = 0;
    for (int i = 0; i < 10000; ++i) {
        const geometry::Point3 p =
            geometry::tether_tip(site, len(rng), az(rng), el(rng));
        if (!geometry::region_contains(site, p)) {
            ++escapes;
        }
    }
    report(5, "hovering-region membership vs reference",
           disagreements == 0 && escapes == 0,
           std::to_string(disagreements) + " disagreements, " +
               std::to_string(escapes) + " escaped tether points");
}

// 6. Mean path loss bounded by the excess-loss envelope, equality
// approached at the elevation extremes.
void criterion_6() {
    std::mt19937 rng(106);
    std::uniform_real_distribution<double> theta(0.0, 90.0);
    std::uniform_real_distribution<double> dist(1.0, 5000.0);
    bool bounded = true;
    for (int i = 0; i < 1000; ++i) {
        const double th = theta(rng);
        const double d = dist(rng);
        const double fspl = channel::fspl_db(kRadio.f_c_hz, d);
        const double pl = channel::mean_path_loss_db(kUrban, kRadio, th, d);
        bounded = bounded && pl >= fspl + kUrban.mu_los_db - 1e-12 &&
                  pl <= fspl + kUrban.mu_nlos_db + 1e-12;
    }
    const double fspl = channel::fspl_db(kRadio.f_c_hz, 300.0);
    const double gap_los =
        channel::mean_path_loss_db(kUrban, kRadio, 90.0, 300.0) -
        (fspl + kUrban.mu_los_db);
    const double gap_nlos =
        (fspl + kUrban.mu_nlos_db) -
        channel::mean_path_loss_db(kUrban, kRadio, 0.0, 300.0);
    report(6, "path-loss bounds and extreme-angle collapse",
           bounded && gap_los <= 1e-3 && gap_nlos <= 0.263,
           "gap(90) = " + fmt(gap_los) + " dB, gap(0) = " + fmt(gap_nlos) +
               " dB");
}

// 7. Coverage probability nonincreasing in user distance at fixed altitude
// with equal shadowing spreads.
void criterion_7() {
    const geometry::Point3 uav{0.0, 0.0, 100.0};
    int inversions = 0;
    double prev = 1.0;
    for (int i = 0; i < 200; ++i) {
        const geometry::GroundPoint user{10.0 + 12.0 * i, 0.0};
        const double cov =
            channel::evaluate_link(kUrban, kRadio, uav, user).coverage_prob;
        if (cov > prev + 1e-15) {
            ++inversions;
        }
        prev = cov;
    }
    report(7, "coverage monotone in user distance (sigma 8/8)",
           inversions == 0, std::to_string(inversions) + " inversions");
}

// 8. Optimizer agrees with the exhaustive reference on seeded scenarios.
void criterion_8() {
    channel::RadioConfig radio = kRadio;
    radio.p_min_dbm = -65.0; // keeps the objective away from saturation

    bool ok = true;
    std::string detail;
    for (int k = 0; k < 5; ++k) {
        std::mt19937 rng(1000 + k);
        std::uniform_int_distribution<int> n_users(1, 10);
        std::uniform_real_distribution<double> coord(-1200.0, 1200.0);
        std::uniform_real_distribution<double> tether(50.0, 200.0);
        const double angles[] = {20.0, 30.0, 60.0};

        geometry::AnchorSite site;
        site.position = {0.0, 0.0};
        site.t_max_m = tether(rng);
        site.theta_min_deg = angles[k % 3];
        placement::UserSet users;
        const int n = n_users(rng);
        for (int i = 0; i < n; ++i) {
            users.users.push_back({coord(rng), coord(rng)});
        }

        const auto t0 = std::chrono::steady_clock::now();
        const auto opt =
            placement::optimize_placement(site, users, kUrban, radio, 5.0);
        const double opt_seconds = seconds_since(t0);
        const auto brute =
            placement::brute_force_placement(site, users, kUrban, radio, 3.0);

        const double gap = std::fabs(opt.objective - brute.objective);
        const bool scenario_ok = gap <= 1e-3 && opt_seconds <= 10.0 &&
                                 geometry::region_contains(site, opt.position);
        ok = ok && scenario_ok;
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += "s" + std::to_string(k) + " gap=" + fmt(gap) + " t=" +
                  fmt(opt_seconds) + "s";
    }
    report(8, "optimizer vs exhaustive reference (5 seeded scenarios)", ok,
           detail);
}

// 9. Sweep structure: cardinality, determinism, per-row sanity.
void criterion_9() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto cfg = config::parse_config("{}", nullptr);

    const auto tmp = std::filesystem::temp_directory_path();
    const auto out1 = tmp / "tuavsim_acceptance_sweep1.csv";
    const auto out2 = tmp / "tuavsim_acceptance_sweep2.csv";
    cli::cmd_sweep(cfg, out1.string());
    cli::cmd_sweep(cfg, out2.string());

    const auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    const std::string a = slurp(out1);
    const std::string b = slurp(out2);
    std::filesystem::remove(out1);
    std::filesystem::remove(out2);

    const auto records = experiments::run_distance_sweep(cfg.sweep_spec());
    const std::size_t expected =
        cfg.angles_deg.size() * cfg.distances.values().size();
    bool rows_ok = records.size() == expected;
    for (const auto& r : records) {
        rows_ok = rows_ok && r.p_los + r.p_nlos == 1.0 && r.p_los >= 0.0 &&
                  r.p_los <= 1.0 && r.coverage_prob >= 0.0 &&
                  r.coverage_prob <= 1.0;
    }
    const std::size_t csv_rows =
        static_cast<std::size_t>(std::count(a.begin(), a.end(), '\n')) - 1;
    const double elapsed = seconds_since(t0);
    report(9, "sweep cardinality, determinism, row sanity",
           rows_ok && a == b && csv_rows == expected && elapsed < 5.0,
           std::to_string(csv_rows) + " rows, byte-identical reruns, " +
               fmt(elapsed) + " s");
}

// 10. Qualitative curve structure of the emitted sweep tables.
void criterion_10() {
    experiments::SweepSpec spec{};
    spec.angles_deg = {20.0};
    const auto records = experiments::run_distance_sweep(spec);

    const double offset = std::hypot(
        records.front().uav_position.x - spec.site.position.x,
        records.front().uav_position.y - spec.site.position.y);

    bool pl_monotone = true;
    bool cov_ok = true;
    bool cov_monotone = true;
    double prev_pl = -1.0;
    double prev_cov = 2.0;
    bool past_offset = false;
    for (const auto& r : records) {
        if (past_offset) {
            pl_monotone = pl_monotone && r.path_loss_db > prev_pl;
            cov_monotone =
                cov_monotone && r.coverage_prob <= prev_cov + 1e-15;
        }
        cov_ok = cov_ok && r.coverage_prob >= 0.0 && r.coverage_prob <= 1.0;
        if (r.distance_m > offset) {
            past_offset = true;
        }
        prev_pl = r.path_loss_db;
        prev_cov = r.coverage_prob;
    }

    // Observed endpoints, reported for comparison but not asserted.
    const auto pl_at = [&](double d) {
        for (const auto& r : records) {
            if (r.distance_m == d) {
                return r.path_loss_db;
            }
        }
        return std::nan("");
    };
    report(10, "sweep curve structure (path loss up, coverage bounded)",
           pl_monotone && cov_ok && cov_monotone,
           "UAV offset " + fmt(offset) + " m; observed PL(100)=" +
               fmt(pl_at(100.0)) + " dB, PL(500)=" + fmt(pl_at(500.0)) +
               " dB, PL(1000)=" + fmt(pl_at(1000.0)) + " dB");
}

} // namespace

int main() {
    run_criterion(1, "LoS/NLoS complementarity", [] { criterion_1(); });
    run_criterion(2, "sigmoid anchor point", [] { criterion_2(); });
    run_criterion(3, "FSPL laws", [] { criterion_3(); });
    run_criterion(4, "Q-function accuracy", [] { criterion_4(); });
    run_criterion(5, "region membership", [] { criterion_5(); });
    run_criterion(6, "path-loss bounds", [] { criterion_6(); });
    run_criterion(7, "coverage monotonicity", [] { criterion_7(); });
    run_criterion(8, "optimizer vs reference", [] { criterion_8(); });
    run_criterion(9, "sweep structure", [] { criterion_9(); });
    run_criterion(10, "figure-structure qualitative checks",
                  [] { criterion_10(); });

    if (g_failures == 0) {
        std::printf("all 10 criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
