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

#include "tuavsim/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "tuavsim/errors.hpp"

namespace tuavsim::config {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw DomainError("config: " + path + ": " + msg);
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) {
        fail(path, "must be an object");
    }
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) {
            fail(path.empty() ? key : path + "." + key, "unknown key");
        }
    }
}

double get_double(const json& obj, const std::string& path, const char* key,
                  double def, bool* present = nullptr) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        if (present) {
            *present = false;
        }
        return def;
    }
    if (present) {
        *present = true;
    }
    if (!it->is_number()) {
        fail(path + "." + key, "must be a number");
    }
    return it->get<double>();
}

std::string get_string(const json& obj, const std::string& path,
                       const char* key, const std::string& def) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return def;
    }
    if (!it->is_string()) {
        fail(path + "." + key, "must be a string");
    }
    return it->get<std::string>();
}

void parse_anchor(const json& j, ScenarioConfig& cfg) {
    check_keys(j, "anchor", {"x", "y", "t_max_m", "theta_min_deg"});
    cfg.site.position.x = get_double(j, "anchor", "x", cfg.site.position.x);
    cfg.site.position.y = get_double(j, "anchor", "y", cfg.site.position.y);
    cfg.site.t_max_m = get_double(j, "anchor", "t_max_m", cfg.site.t_max_m);
    cfg.site.theta_min_deg =
        get_double(j, "anchor", "theta_min_deg", cfg.site.theta_min_deg);
}

void parse_environment(const json& j, ScenarioConfig& cfg,
                       std::vector<std::string>& warnings) {
    check_keys(j, "environment",
               {"a", "b", "mu_los_db", "mu_nlos_db", "sigma_los_db",
                "sigma_nlos_db"});
    cfg.env.a = get_double(j, "environment", "a", cfg.env.a);
    cfg.env.b = get_double(j, "environment", "b", cfg.env.b);
    cfg.env.mu_los_db =
        get_double(j, "environment", "mu_los_db", cfg.env.mu_los_db);
    cfg.env.mu_nlos_db =
        get_double(j, "environment", "mu_nlos_db", cfg.env.mu_nlos_db);
    bool have_sl = false;
    bool have_sn = false;
    cfg.env.sigma_los_db = get_double(j, "environment", "sigma_los_db",
                                      cfg.env.sigma_los_db, &have_sl);
    cfg.env.sigma_nlos_db = get_double(j, "environment", "sigma_nlos_db",
                                       cfg.env.sigma_nlos_db, &have_sn);
    if (!have_sl) {
        warnings.push_back("environment.sigma_los_db not set; defaulting to " +
                           std::to_string(cfg.env.sigma_los_db) + " dB");
    }
    if (!have_sn) {
        warnings.push_back(
            "environment.sigma_nlos_db not set; defaulting to " +
            std::to_string(cfg.env.sigma_nlos_db) + " dB");
    }
}

void parse_radio(const json& j, ScenarioConfig& cfg,
                 std::vector<std::string>& warnings) {
    check_keys(j, "radio",
               {"f_c_hz", "p_t_dbm", "g_db", "p_min_dbm", "noise_dbm",
                "bandwidth_hz"});
    bool have_fc = false;
    bool have_pmin = false;
    cfg.radio.f_c_hz =
        get_double(j, "radio", "f_c_hz", cfg.radio.f_c_hz, &have_fc);
    cfg.radio.p_t_dbm = get_double(j, "radio", "p_t_dbm", cfg.radio.p_t_dbm);
    cfg.radio.g_db = get_double(j, "radio", "g_db", cfg.radio.g_db);
    cfg.radio.p_min_dbm =
        get_double(j, "radio", "p_min_dbm", cfg.radio.p_min_dbm, &have_pmin);
    cfg.radio.noise_dbm =
        get_double(j, "radio", "noise_dbm", cfg.radio.noise_dbm);
    cfg.radio.bandwidth_hz =
        get_double(j, "radio", "bandwidth_hz", cfg.radio.bandwidth_hz);
    if (!have_fc) {
        warnings.push_back("radio.f_c_hz not set; defaulting to " +
                           std::to_string(cfg.radio.f_c_hz) + " Hz");
    }
    if (!have_pmin) {
        warnings.push_back("radio.p_min_dbm not set; defaulting to " +
                           std::to_string(cfg.radio.p_min_dbm) + " dBm");
    }
}

void parse_los_model(const json& j, ScenarioConfig& cfg) {
    check_keys(j, "los_model", {"kind", "a2", "b2"});
    const std::string kind = get_string(j, "los_model", "kind", "sigmoid");
    if (kind == "sigmoid") {
        cfg.los.kind = channel::LosModel::Kind::Sigmoid;
    } else if (kind == "power_law") {
        cfg.los.kind = channel::LosModel::Kind::PowerLaw;
    } else {
        fail("los_model.kind", "must be \"sigmoid\" or \"power_law\" (got \"" +
                                   kind + "\")");
    }
    cfg.los.powerlaw.a2 = get_double(j, "los_model", "a2", cfg.los.powerlaw.a2);
    cfg.los.powerlaw.b2 = get_double(j, "los_model", "b2", cfg.los.powerlaw.b2);
}

void parse_sweep(const json& j, ScenarioConfig& cfg) {
    check_keys(j, "sweep", {"angles_deg", "distances_m", "azimuth"});
    if (const auto it = j.find("angles_deg"); it != j.end()) {
        if (!it->is_array()) {
            fail("sweep.angles_deg", "must be an array of numbers");
        }
        cfg.angles_deg.clear();
        for (const auto& v : *it) {
            if (!v.is_number()) {
                fail("sweep.angles_deg", "must be an array of numbers");
            }
            cfg.angles_deg.push_back(v.get<double>());
        }
    }
    if (const auto it = j.find("distances_m"); it != j.end()) {
        check_keys(*it, "sweep.distances_m", {"start_m", "stop_m", "step_m"});
        cfg.distances.start_m = get_double(*it, "sweep.distances_m", "start_m",
                                           cfg.distances.start_m);
        cfg.distances.stop_m = get_double(*it, "sweep.distances_m", "stop_m",
                                          cfg.distances.stop_m);
        cfg.distances.step_m = get_double(*it, "sweep.distances_m", "step_m",
                                          cfg.distances.step_m);
    }
    if (const auto it = j.find("azimuth"); it != j.end()) {
        check_keys(*it, "sweep.azimuth", {"policy", "fixed_deg"});
        const std::string policy =
            get_string(*it, "sweep.azimuth", "policy", "toward_user");
        if (policy == "toward_user") {
            cfg.azimuth.kind = experiments::AzimuthPolicy::Kind::TowardUser;
        } else if (policy == "fixed") {
            cfg.azimuth.kind = experiments::AzimuthPolicy::Kind::Fixed;
        } else {
            fail("sweep.azimuth.policy",
                 "must be \"toward_user\" or \"fixed\" (got \"" + policy +
                     "\")");
        }
        cfg.azimuth.fixed_deg = get_double(*it, "sweep.azimuth", "fixed_deg",
                                           cfg.azimuth.fixed_deg);
    }
}

void parse_placement(const json& j, ScenarioConfig& cfg) {
    check_keys(j, "placement", {"policy", "azimuth_deg", "resolution_m"});
    const std::string policy =
        get_string(j, "placement", "policy", "fixed_angle_max_tether");
    if (policy == "fixed_angle_max_tether") {
        cfg.placement.kind =
            placement::PlacementPolicy::Kind::FixedAngleMaxTether;
    } else if (policy == "grid_optimized") {
        cfg.placement.kind = placement::PlacementPolicy::Kind::GridOptimized;
    } else {
        fail("placement.policy",
             "must be \"fixed_angle_max_tether\" or \"grid_optimized\" "
             "(got \"" +
                 policy + "\")");
    }
    cfg.placement.azimuth_deg =
        get_double(j, "placement", "azimuth_deg", cfg.placement.azimuth_deg);
    cfg.placement.resolution_m =
        get_double(j, "placement", "resolution_m", cfg.placement.resolution_m);
}

void parse_users(const json& j, ScenarioConfig& cfg) {
    if (!j.is_array()) {
        fail("users", "must be an array of {x, y} objects");
    }
    cfg.users.users.clear();
    std::size_t i = 0;
    for (const auto& u : j) {
        const std::string path = "users[" + std::to_string(i) + "]";
        check_keys(u, path, {"x", "y"});
        geometry::GroundPoint p;
        p.x = get_double(u, path, "x", 0.0);
        p.y = get_double(u, path, "y", 0.0);
        cfg.users.users.push_back(p);
        ++i;
    }
}

// Line/column of a 1-based byte offset, for parse-error diagnostics.
std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = byte == 0 ? 0 : byte - 1;
    for (std::size_t i = 0; i < end && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

void ScenarioConfig::validate() const {
    const auto wrap = [](const char* section, const auto& fn) {
        try {
            fn();
        } catch (const DomainError& e) {
            throw DomainError("config: " + std::string(section) + ": " +
                              e.what());
        }
    };
    wrap("anchor", [&] { site.validate(); });
    wrap("environment", [&] { env.validate(); });
    wrap("radio", [&] { radio.validate(); });
    wrap("placement", [&] { placement.validate(); });
    wrap("users", [&] { users.validate(); });
    wrap("sweep", [&] {
        distances.validate();
        for (const double a : angles_deg) {
            if (!std::isfinite(a) || a <= 0.0 || a > 90.0) {
                throw DomainError("angles_deg entries must be in (0, 90]");
            }
        }
    });
    if (los.kind == channel::LosModel::Kind::PowerLaw) {
        wrap("los_model", [&] { los.powerlaw.validate(); });
    }
}

experiments::SweepSpec ScenarioConfig::sweep_spec() const {
    experiments::SweepSpec spec;
    spec.site = site;
    spec.angles_deg = angles_deg;
    spec.distances = distances;
    spec.env = env;
    spec.radio = radio;
    spec.placement = placement;
    spec.azimuth = azimuth;
    spec.los = los;
    return spec;
}

ScenarioConfig parse_config(const std::string& json_text,
                            std::vector<std::string>* warnings) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(json_text, e.byte);
        throw DomainError("config: parse error at line " +
                          std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + e.what());
    }
    if (!root.is_object()) {
        throw DomainError("config: top level must be a JSON object");
    }
    check_keys(root, "",
               {"anchor", "environment", "radio", "los_model", "sweep",
                "placement", "users"});

    ScenarioConfig cfg;
    std::vector<std::string> local_warnings;
    const auto section = [&root](const char* name) {
        const auto it = root.find(name);
        return it != root.end() ? *it : json::object();
    };
    if (const auto it = root.find("anchor"); it != root.end()) {
        parse_anchor(*it, cfg);
    }
    parse_environment(section("environment"), cfg, local_warnings);
    parse_radio(section("radio"), cfg, local_warnings);
    if (const auto it = root.find("los_model"); it != root.end()) {
        parse_los_model(*it, cfg);
    }
    if (const auto it = root.find("sweep"); it != root.end()) {
        parse_sweep(*it, cfg);
    }
    if (const auto it = root.find("placement"); it != root.end()) {
        parse_placement(*it, cfg);
    }
    if (const auto it = root.find("users"); it != root.end()) {
        parse_users(*it, cfg);
    } else {
        // Default device sits 300 m along +x from the anchor.
        cfg.users.users = {{cfg.site.position.x + 300.0, cfg.site.position.y}};
    }

    cfg.validate();
    if (warnings) {
        *warnings = std::move(local_warnings);
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path,
                           std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("failed reading config file: " + path);
    }
    try {
        return parse_config(buf.str(), warnings);
    } catch (const DomainError& e) {
        throw DomainError(path + ": " + e.what());
    }
}

std::string serialize_config(const ScenarioConfig& cfg) {
    ordered_json j;
    j["anchor"] = {{"x", cfg.site.position.x},
                   {"y", cfg.site.position.y},
                   {"t_max_m", cfg.site.t_max_m},
                   {"theta_min_deg", cfg.site.theta_min_deg}};
    j["environment"] = {{"a", cfg.env.a},
                        {"b", cfg.env.b},
                        {"mu_los_db", cfg.env.mu_los_db},
                        {"mu_nlos_db", cfg.env.mu_nlos_db},
                        {"sigma_los_db", cfg.env.sigma_los_db},
                        {"sigma_nlos_db", cfg.env.sigma_nlos_db}};
    j["radio"] = {{"f_c_hz", cfg.radio.f_c_hz},
                  {"p_t_dbm", cfg.radio.p_t_dbm},
                  {"g_db", cfg.radio.g_db},
                  {"p_min_dbm", cfg.radio.p_min_dbm},
                  {"noise_dbm", cfg.radio.noise_dbm},
                  {"bandwidth_hz", cfg.radio.bandwidth_hz}};
    j["los_model"] = {
        {"kind",
         cfg.los.kind == channel::LosModel::Kind::PowerLaw ? "power_law"
                                                           : "sigmoid"},
        {"a2", cfg.los.powerlaw.a2},
        {"b2", cfg.los.powerlaw.b2}};
    j["sweep"] = {
        {"angles_deg", cfg.angles_deg},
        {"distances_m",
         {{"start_m", cfg.distances.start_m},
          {"stop_m", cfg.distances.stop_m},
          {"step_m", cfg.distances.step_m}}},
        {"azimuth",
         {{"policy",
           cfg.azimuth.kind == experiments::AzimuthPolicy::Kind::Fixed
               ? "fixed"
               : "toward_user"},
          {"fixed_deg", cfg.azimuth.fixed_deg}}}};
    j["placement"] = {
        {"policy",
         cfg.placement.kind == placement::PlacementPolicy::Kind::GridOptimized
             ? "grid_optimized"
             : "fixed_angle_max_tether"},
        {"azimuth_deg", cfg.placement.azimuth_deg},
        {"resolution_m", cfg.placement.resolution_m}};
    ordered_json users = ordered_json::array();
    for (const auto& u : cfg.users.users) {
        users.push_back({{"x", u.x}, {"y", u.y}});
    }
    j["users"] = users;
    return j.dump(2) + "\n";
}

} // namespace tuavsim::config
