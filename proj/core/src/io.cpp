#include "coco/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace coco {

namespace {

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

}  // namespace

void write_metrics_csv(const std::string& path, const SimTrace& trace) {
    std::ofstream out = open_or_throw(path);
    out << "step,time_s,mean_ue_rss_dbm,min_ue_rss_dbm,mean_payoff,connected,solver_sweeps,"
           "stage_ms\n";
    char line[256];
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const StepRecord& s = trace.steps[i];
        std::snprintf(line, sizeof(line), "%zu,%.3f,%.6f,%.6f,%.6f,%d,%d,%.3f\n", i,
                      static_cast<double>(i) * trace.config.dt, s.mean_ue_rss(), s.min_ue_rss(),
                      s.mean_payoff(), s.connected ? 1 : 0, s.solver_sweeps, s.stage_ms);
        out << line;
    }
}

void write_trajectories_json(const std::string& path, const SimTrace& trace) {
    nlohmann::json doc;
    doc["dt_s"] = trace.config.dt;
    auto& robots = doc["robots"] = nlohmann::json::array();
    auto& ues = doc["ues"] = nlohmann::json::array();
    for (const StepRecord& s : trace.steps) {
        nlohmann::json robot_step = nlohmann::json::array();
        for (const RobotState& r : s.robots)
            robot_step.push_back({r.position.x, r.position.y});
        robots.push_back(std::move(robot_step));
        nlohmann::json ue_step = nlohmann::json::array();
        for (const Vec2& u : s.ue_positions) ue_step.push_back({u.x, u.y});
        ues.push_back(std::move(ue_step));
    }
    open_or_throw(path) << doc.dump(2) << "\n";
}

void write_manifest_json(const std::string& path, const ScenarioConfig& config) {
    nlohmann::json doc;
    doc["tool"] = "coco";
    doc["version"] = kVersion;
    doc["seed"] = config.seed;
    nlohmann::json map = nlohmann::json::object();
    for (const auto& [key, value] : scenario_to_map(config)) map[key] = value;
    doc["config"] = std::move(map);
    open_or_throw(path) << doc.dump(2) << "\n";
}

void write_sweep_csv(const std::string& path, const SweepResult& result) {
    std::ofstream out = open_or_throw(path);
    out << "group,step,mean_ue_rss_dbm,stderr_ue_rss_dbm,mean_payoff,stderr_payoff\n";
    char line[320];
    for (const SweepGroup& group : result.groups) {
        for (std::size_t s = 0; s < group.mean_ue_rss.size(); ++s) {
            std::snprintf(line, sizeof(line), "%s,%zu,%.6f,%.6f,%.6f,%.6f\n",
                          group.label.c_str(), s, group.mean_ue_rss[s], group.stderr_ue_rss[s],
                          group.mean_payoff[s], group.stderr_payoff[s]);
            out << line;
        }
    }
}

}  // namespace coco
