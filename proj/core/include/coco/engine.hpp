#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coco/channel.hpp"
#include "coco/dynamics.hpp"
#include "coco/game.hpp"
#include "coco/mfvi.hpp"
#include "coco/roi.hpp"

namespace coco {

enum class ControllerKind { Coco, Disk };

/// Full description of one simulation run. Defaults follow the reference
/// experiment setup: 1 Hz stages, k = 3 hops, 10 m ROI cells, accelerations
/// within +-3 m/s^2, coverage weight 1 and pairwise weight 0.001, 60 m disk
/// radius for the baseline controller.
struct ScenarioConfig {
    int uav_count = 3;
    /// Explicit initial states; when empty, robots are placed on distinct
    /// 1 m grid cells around the origin, drawn deterministically from seed.
    std::vector<RobotState> robot_start;
    double altitude_m = 10.0;  ///< constant per scenario; geometry is planar

    std::vector<Vec2> ue_start;  ///< empty selects a default 5-UE ring
    std::vector<Vec2> ue_goals;  ///< empty means stationary UEs
    double ue_speed = 1.0;       ///< m/s

    int k = 3;
    PayoffWeights weights;
    ChannelParams channel;

    double a_max = 3.0;
    int action_levels = 5;
    double v_max = 5.0;

    double dt = 1.0;
    double duration_s = 40.0;
    std::uint64_t seed = 0;

    ControllerKind controller = ControllerKind::Coco;
    double disk_radius_m = 60.0;

    double cell_size_m = 10.0;
    double mahalanobis_cut = 3.0;

    double tol = 1e-6;
    int max_sweeps = 100;
    bool warm_start = false;

    int step_count() const { return static_cast<int>(duration_s / dt); }

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    /// Initial robot states: robot_start if given, otherwise the seeded
    /// 1 m grid placement.
    std::vector<RobotState> initial_states() const;

    /// UE team resolved from the config (default ring when unset).
    UeTeam initial_ues() const;
};

/// One record per simulation step.
struct StepRecord {
    std::vector<RobotState> robots;  ///< post-step states
    std::vector<Vec2> ue_positions;  ///< post-step positions
    std::vector<int> actions;        ///< executed action indices
    bool connected = false;          ///< link graph spans all robots
    std::vector<double> ue_best_rss_dbm;  ///< per UE, best sampled RSS
    std::vector<double> robot_payoffs;    ///< at the executed joint action
    std::vector<int> neighborhood_sizes;
    double mean_finite_hops = 0.0;  ///< over reachable robot pairs
    int reachable_pairs = 0;
    int solver_sweeps = 0;
    bool solver_converged = false;
    double solver_delta = 0.0;
    double stage_ms = 0.0;  ///< wall-clock build + solve time

    double mean_ue_rss() const;
    double min_ue_rss() const;
    double mean_payoff() const;
};

struct SimTrace {
    ScenarioConfig config;
    std::vector<StepRecord> steps;
};

/// Runs the scenario: per step, sample the link graph, route, pick
/// neighborhoods (k-hop or disk), rebuild the ROI grid, build and solve the
/// stage game, execute the selected actions, advance the UEs, record
/// metrics. Fully deterministic given the seed.
SimTrace run(const ScenarioConfig& config);

/// Per-UE best sampled RSS over robots; one fading draw per (UE, robot)
/// pair in fixed order (UE-major).
std::vector<double> ue_rss_metric(const std::vector<Vec2>& robot_positions,
                                  const std::vector<Vec2>& ue_positions,
                                  const ChannelParams& params, Rng& rng);

/// One swept experiment axis.
struct SweepAxis {
    enum class Kind { HopCount, UavCount, Controller };
    Kind kind = Kind::HopCount;
    std::vector<std::string> values;

    static SweepAxis parse(const std::string& spec);  ///< e.g. "k=1,2,3"
    std::string name() const;
};

/// Per-combination sweep summary. Trial series are kept so callers can form
/// their own statistics; mean/stderr across trials are precomputed per step.
struct SweepGroup {
    std::string label;
    std::vector<std::vector<double>> trial_mean_ue_rss;  ///< [trial][step]
    std::vector<std::vector<double>> trial_mean_payoff;  ///< [trial][step]
    std::vector<double> mean_ue_rss;    ///< per step, over trials
    std::vector<double> stderr_ue_rss;  ///< standard error of the mean
    std::vector<double> mean_payoff;
    std::vector<double> stderr_payoff;
};

struct SweepResult {
    SweepAxis axis;
    int trials = 0;
    std::vector<SweepGroup> groups;
};

/// Runs trials per axis value with sub-seeds derived from
/// (seed, combination index, trial index); deterministic end to end.
SweepResult sweep(const ScenarioConfig& base, const SweepAxis& axis, int trials);

}  // namespace coco
