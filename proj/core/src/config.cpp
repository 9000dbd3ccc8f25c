#include "coco/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace coco {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double parsed = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0')
        throw ConfigError("invalid number for field '" + key + "': " + value);
    return parsed;
}

long long parse_int(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const long long parsed = std::strtoll(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0')
        throw ConfigError("invalid integer for field '" + key + "': " + value);
    return parsed;
}

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw ConfigError("invalid boolean for field '" + key + "': " + value);
}

/// Vec2 list format: whitespace-separated "x,y" pairs.
std::vector<Vec2> parse_vec_list(const std::string& key, const std::string& value) {
    std::vector<Vec2> out;
    std::istringstream stream(value);
    std::string token;
    while (stream >> token) {
        const auto comma = token.find(',');
        if (comma == std::string::npos)
            throw ConfigError("invalid point for field '" + key + "': " + token);
        const double x = parse_double(key, token.substr(0, comma));
        const double y = parse_double(key, token.substr(comma + 1));
        out.push_back({x, y});
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_vec_list(const std::vector<Vec2>& points) {
    std::string out;
    for (const Vec2& p : points) {
        if (!out.empty()) out += " ";
        out += format_double(p.x) + "," + format_double(p.y);
    }
    return out;
}

}  // namespace

ConfigMap parse_config_text(std::istream& in) {
    ConfigMap map;
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line = line.substr(0, comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("config line " + std::to_string(line_no) +
                                  ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        map[section.empty() ? key : section + "." + key] = value;
    }
    return map;
}

ConfigMap load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json doc;
        in >> doc;
        if (!doc.contains("config") || !doc["config"].is_object())
            throw ConfigError("manifest missing 'config' object: " + path);
        ConfigMap map;
        for (const auto& [key, value] : doc["config"].items())
            map[key] = value.get<std::string>();
        return map;
    }
    return parse_config_text(in);
}

void apply_overrides(ConfigMap& map, const std::vector<std::string>& overrides) {
    for (const std::string& raw : overrides) {
        std::string entry = raw;
        while (!entry.empty() && entry.front() == '-') entry.erase(entry.begin());
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw ConfigError("override must be key=value: " + raw);
        map[trim(entry.substr(0, eq))] = trim(entry.substr(eq + 1));
    }
}

ScenarioConfig scenario_from_map(const ConfigMap& map) {
    ScenarioConfig config;
    if (!map.count("seed")) throw ConfigError("missing required field: seed");

    for (const auto& [key, value] : map) {
        if (key == "seed") {
            config.seed = static_cast<std::uint64_t>(parse_int(key, value));
        } else if (key == "uav_count") {
            config.uav_count = static_cast<int>(parse_int(key, value));
        } else if (key == "robot_start") {
            config.robot_start.clear();
            for (const Vec2& p : parse_vec_list(key, value))
                config.robot_start.push_back({p, {0.0, 0.0}});
        } else if (key == "altitude_m") {
            config.altitude_m = parse_double(key, value);
        } else if (key == "ue_start") {
            config.ue_start = parse_vec_list(key, value);
        } else if (key == "ue_goals") {
            config.ue_goals = parse_vec_list(key, value);
        } else if (key == "ue_speed") {
            config.ue_speed = parse_double(key, value);
        } else if (key == "k") {
            config.k = static_cast<int>(parse_int(key, value));
        } else if (key == "alpha_a") {
            config.weights.alpha_a = parse_double(key, value);
        } else if (key == "alpha_b") {
            config.weights.alpha_b = parse_double(key, value);
        } else if (key == "dt_s") {
            config.dt = parse_double(key, value);
        } else if (key == "duration_s") {
            config.duration_s = parse_double(key, value);
        } else if (key == "controller") {
            if (value == "coco") {
                config.controller = ControllerKind::Coco;
            } else if (value == "disk") {
                config.controller = ControllerKind::Disk;
            } else {
                throw ConfigError("invalid controller for field 'controller': " + value +
                                  " (expected coco or disk)");
            }
        } else if (key == "disk_radius_m") {
            config.disk_radius_m = parse_double(key, value);
        } else if (key == "channel.t0_dbm") {
            config.channel.t0_dbm = parse_double(key, value);
        } else if (key == "channel.l0_dbm") {
            config.channel.l0_dbm = parse_double(key, value);
        } else if (key == "channel.path_loss_exp") {
            config.channel.path_loss_exp = parse_double(key, value);
        } else if (key == "channel.fading_var_dbm2") {
            config.channel.fading_var_dbm2 = parse_double(key, value);
        } else if (key == "channel.link_threshold_dbm") {
            config.channel.link_threshold_dbm = parse_double(key, value);
        } else if (key == "channel.d_min_m") {
            config.channel.d_min_m = parse_double(key, value);
        } else if (key == "dynamics.a_max") {
            config.a_max = parse_double(key, value);
        } else if (key == "dynamics.action_levels") {
            config.action_levels = static_cast<int>(parse_int(key, value));
        } else if (key == "dynamics.v_max") {
            config.v_max = parse_double(key, value);
        } else if (key == "roi.cell_size_m") {
            config.cell_size_m = parse_double(key, value);
        } else if (key == "roi.mahalanobis_cut") {
            config.mahalanobis_cut = parse_double(key, value);
        } else if (key == "solver.tol") {
            config.tol = parse_double(key, value);
        } else if (key == "solver.max_sweeps") {
            config.max_sweeps = static_cast<int>(parse_int(key, value));
        } else if (key == "solver.warm_start") {
            config.warm_start = parse_bool(key, value);
        } else {
            throw ConfigError("unknown config field: " + key);
        }
    }

    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return config;
}

ConfigMap scenario_to_map(const ScenarioConfig& config) {
    ConfigMap map;
    map["seed"] = std::to_string(config.seed);
    map["uav_count"] = std::to_string(config.uav_count);
    if (!config.robot_start.empty()) {
        std::vector<Vec2> points;
        for (const RobotState& s : config.robot_start) points.push_back(s.position);
        map["robot_start"] = format_vec_list(points);
    }
    map["altitude_m"] = format_double(config.altitude_m);
    if (!config.ue_start.empty()) map["ue_start"] = format_vec_list(config.ue_start);
    if (!config.ue_goals.empty()) map["ue_goals"] = format_vec_list(config.ue_goals);
    map["ue_speed"] = format_double(config.ue_speed);
    map["k"] = std::to_string(config.k);
    map["alpha_a"] = format_double(config.weights.alpha_a);
    map["alpha_b"] = format_double(config.weights.alpha_b);
    map["dt_s"] = format_double(config.dt);
    map["duration_s"] = format_double(config.duration_s);
    map["controller"] = config.controller == ControllerKind::Coco ? "coco" : "disk";
    map["disk_radius_m"] = format_double(config.disk_radius_m);
    map["channel.t0_dbm"] = format_double(config.channel.t0_dbm);
    map["channel.l0_dbm"] = format_double(config.channel.l0_dbm);
    map["channel.path_loss_exp"] = format_double(config.channel.path_loss_exp);
    map["channel.fading_var_dbm2"] = format_double(config.channel.fading_var_dbm2);
    map["channel.link_threshold_dbm"] = format_double(config.channel.link_threshold_dbm);
    map["channel.d_min_m"] = format_double(config.channel.d_min_m);
    map["dynamics.a_max"] = format_double(config.a_max);
    map["dynamics.action_levels"] = std::to_string(config.action_levels);
    map["dynamics.v_max"] = format_double(config.v_max);
    map["roi.cell_size_m"] = format_double(config.cell_size_m);
    map["roi.mahalanobis_cut"] = format_double(config.mahalanobis_cut);
    map["solver.tol"] = format_double(config.tol);
    map["solver.max_sweeps"] = std::to_string(config.max_sweeps);
    map["solver.warm_start"] = config.warm_start ? "true" : "false";
    return map;
}

}  // namespace coco
