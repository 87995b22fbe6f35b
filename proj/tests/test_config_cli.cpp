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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "tuavsim/commands.hpp"
#include "tuavsim/config.hpp"
#include "tuavsim/csv.hpp"
#include "tuavsim/errors.hpp"

using namespace tuavsim;
using config::ScenarioConfig;

namespace {

std::filesystem::path temp_path(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("minimal config applies documented defaults with warnings") {
    std::vector<std::string> warnings;
    const ScenarioConfig cfg = config::parse_config("{}", &warnings);

    CHECK(cfg.env.a == 10.6);
    CHECK(cfg.env.b == 0.18);
    CHECK(cfg.env.mu_los_db == 1.0);
    CHECK(cfg.env.mu_nlos_db == 20.0);
    CHECK(cfg.radio.p_t_dbm == 40.0);
    CHECK(cfg.radio.g_db == 3.0);
    CHECK(cfg.radio.noise_dbm == -174.0);
    CHECK(cfg.radio.bandwidth_hz == 5.0e6);
    CHECK(cfg.angles_deg == std::vector<double>{20.0, 30.0, 60.0});
    CHECK(cfg.distances.start_m == 50.0);
    CHECK(cfg.distances.stop_m == 1000.0);
    CHECK(cfg.distances.step_m == 10.0);
    CHECK(cfg.site.t_max_m == 100.0);
    REQUIRE(cfg.users.users.size() == 1);
    CHECK(cfg.users.users[0].x == 300.0);

    // the four calibration values warn when defaulted
    REQUIRE(warnings.size() == 4);
    bool fc = false, pmin = false, sl = false, sn = false;
    for (const auto& w : warnings) {
        fc = fc || w.find("f_c_hz") != std::string::npos;
        pmin = pmin || w.find("p_min_dbm") != std::string::npos;
        sl = sl || w.find("sigma_los_db") != std::string::npos;
        sn = sn || w.find("sigma_nlos_db") != std::string::npos;
    }
    CHECK(fc);
    CHECK(pmin);
    CHECK(sl);
    CHECK(sn);

    // explicit values silence the warnings
    warnings.clear();
    config::parse_config(
        R"({"radio": {"f_c_hz": 2.0e9, "p_min_dbm": -90.0},
            "environment": {"sigma_los_db": 8.0, "sigma_nlos_db": 8.0}})",
        &warnings);
    CHECK(warnings.empty());
}

TEST_CASE("unknown keys are rejected with their path") {
    CHECK_THROWS_WITH_AS(config::parse_config(R"({"radoi": {}})", nullptr),
                         doctest::Contains("radoi"), DomainError);
    CHECK_THROWS_WITH_AS(
        config::parse_config(R"({"radio": {"f_c": 2e9}})", nullptr),
        doctest::Contains("radio.f_c"), DomainError);
    CHECK_THROWS_WITH_AS(
        config::parse_config(R"({"users": [{"x": 1, "z": 2}]})", nullptr),
        doctest::Contains("users[0].z"), DomainError);
}

TEST_CASE("invariant violations name the field") {
    CHECK_THROWS_WITH_AS(
        config::parse_config(R"({"anchor": {"theta_min_deg": 95}})", nullptr),
        doctest::Contains("theta_min_deg"), DomainError);
    CHECK_THROWS_WITH_AS(config::parse_config(R"({"users": []})", nullptr),
                         doctest::Contains("users"), DomainError);
    CHECK_THROWS_AS(
        config::parse_config(R"({"environment": {"a": -1}})", nullptr),
        DomainError);
}

TEST_CASE("parse errors report line and column") {
    CHECK_THROWS_WITH_AS(config::parse_config("{\n  \"anchor\": {,\n}",
                                              nullptr),
                         doctest::Contains("line 2"), DomainError);
}

TEST_CASE("config round-trips through serialization") {
    const std::string text = R"({
      "anchor": {"x": 12.5, "y": -4.0, "t_max_m": 150.0,
                 "theta_min_deg": 30.0},
      "environment": {"a": 9.61, "b": 0.16, "mu_los_db": 1.0,
                      "mu_nlos_db": 20.0, "sigma_los_db": 5.5,
                      "sigma_nlos_db": 9.0},
      "radio": {"f_c_hz": 3.5e9, "p_t_dbm": 36.0, "g_db": 5.0,
                "p_min_dbm": -85.0, "noise_dbm": -174.0,
                "bandwidth_hz": 2.0e7},
      "los_model": {"kind": "power_law", "a2": 0.6, "b2": 1.2},
      "sweep": {"angles_deg": [25, 45], "distances_m":
                {"start_m": 100, "stop_m": 400, "step_m": 50},
                "azimuth": {"policy": "fixed", "fixed_deg": 90}},
      "placement": {"policy": "grid_optimized", "resolution_m": 4.0},
      "users": [{"x": 100, "y": 50}, {"x": -30, "y": 75}]
    })";
    const ScenarioConfig cfg = config::parse_config(text, nullptr);
    const std::string serialized = config::serialize_config(cfg);
    const ScenarioConfig reloaded = config::parse_config(serialized, nullptr);
    CHECK(reloaded == cfg);
    CHECK(config::serialize_config(reloaded) == serialized);
}

TEST_CASE("load_config distinguishes I/O from validation failures") {
    CHECK_THROWS_AS(config::load_config("/nonexistent/config.json", nullptr),
                    IoError);

    const auto path = temp_path("tuavsim_bad_config.json");
    std::ofstream(path) << "{\"anchor\": {\"t_max_m\": -5}}";
    CHECK_THROWS_AS(config::load_config(path.string(), nullptr), DomainError);
    std::filesystem::remove(path);
}

TEST_CASE("numbers serialize with nine significant digits") {
    CHECK(csv::format_number(0.12345678912345) == "0.123456789");
    CHECK(csv::format_number(50.0) == "50");
    CHECK(csv::format_number(1000.0) == "1000");
    CHECK(csv::format_number(-90.0) == "-90");
    CHECK(csv::format_number(6.58212721e-06) == "6.58212721e-06");
}

TEST_CASE("cmd_sweep writes the fixed schema deterministically") {
    const ScenarioConfig cfg = config::parse_config("{}", nullptr);
    const auto out1 = temp_path("tuavsim_sweep1.csv");
    const auto out2 = temp_path("tuavsim_sweep2.csv");
    cli::cmd_sweep(cfg, out1.string());
    cli::cmd_sweep(cfg, out2.string());

    const std::string a = read_file(out1);
    const std::string b = read_file(out2);
    CHECK(a == b);

    std::istringstream lines(a);
    std::string line;
    std::size_t n = 0;
    REQUIRE(std::getline(lines, line));
    CHECK(line == csv::kSweepHeader);
    while (std::getline(lines, line)) {
        ++n;
    }
    CHECK(n == 288);

    std::filesystem::remove(out1);
    std::filesystem::remove(out2);
}

TEST_CASE("cmd_place emits the result document and per-user table") {
    ScenarioConfig cfg = config::parse_config(
        R"({"users": [{"x": 200, "y": 0}, {"x": 150, "y": 80}],
            "placement": {"policy": "grid_optimized", "resolution_m": 10}})",
        nullptr);
    const auto out = temp_path("tuavsim_place.json");
    cli::cmd_place(cfg, out.string());

    const std::string doc = read_file(out);
    CHECK(doc.find("\"position\"") != std::string::npos);
    CHECK(doc.find("\"objective\"") != std::string::npos);

    const std::string users_csv = read_file(out.string() + ".users.csv");
    std::istringstream lines(users_csv);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == csv::kUserMetricsHeader);
    std::size_t n = 0;
    while (std::getline(lines, line)) {
        ++n;
    }
    CHECK(n == 2);

    std::filesystem::remove(out);
    std::filesystem::remove(out.string() + ".users.csv");
}

TEST_CASE("cmd_link prints one row for the overhead link") {
    const ScenarioConfig cfg = config::parse_config("{}", nullptr);
    std::ostringstream out;
    cli::cmd_link(cfg, {0, 0, 100}, {0, 0}, out);

    std::istringstream lines(out.str());
    std::string header, row;
    REQUIRE(std::getline(lines, header));
    REQUIRE(std::getline(lines, row));
    CHECK(header ==
          "theta_deg,distance_m,p_los,p_nlos,path_loss_db,coverage_prob");
    CHECK(row.substr(0, 7) == "90,100,");
}

TEST_CASE("cmd_sweep reports unwritable outputs as I/O errors") {
    const ScenarioConfig cfg = config::parse_config("{}", nullptr);
    CHECK_THROWS_AS(cli::cmd_sweep(cfg, "/nonexistent/dir/out.csv"), IoError);
}
