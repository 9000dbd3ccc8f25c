#include "coco/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "coco/netsim.hpp"
#include "coco/rng.hpp"

namespace coco {

namespace {

// Stream purposes for seed derivation.
constexpr std::uint64_t kStreamInit = 1;
constexpr std::uint64_t kStreamLinks = 2;
constexpr std::uint64_t kStreamUeRss = 3;

double mean_of(const std::vector<double>& v) {
    if (v.empty()) return 0.0;
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double stderr_of(const std::vector<double>& v) {
    const std::size_t n = v.size();
    if (n < 2) return 0.0;
    const double m = mean_of(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
}

}  // namespace

void ScenarioConfig::validate() const {
    if (uav_count < 1) throw std::invalid_argument("config: uav_count must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("config: dt must be > 0");
    if (!(duration_s >= dt)) throw std::invalid_argument("config: duration_s must be >= dt");
    if (k < 1) throw std::invalid_argument("config: k must be >= 1");
    if (!(weights.alpha_a > 0.0)) throw std::invalid_argument("config: alpha_a must be > 0");
    if (!(weights.alpha_b > 0.0)) throw std::invalid_argument("config: alpha_b must be > 0");
    if (!(disk_radius_m > 0.0)) throw std::invalid_argument("config: disk_radius_m must be > 0");
    if (!(cell_size_m > 0.0)) throw std::invalid_argument("config: cell_size_m must be > 0");
    if (!(mahalanobis_cut > 0.0))
        throw std::invalid_argument("config: mahalanobis_cut must be > 0");
    if (!(tol > 0.0)) throw std::invalid_argument("config: tol must be > 0");
    if (max_sweeps < 1) throw std::invalid_argument("config: max_sweeps must be >= 1");
    if (action_levels < 1) throw std::invalid_argument("config: action_levels must be >= 1");
    if (!(a_max > 0.0)) throw std::invalid_argument("config: a_max must be > 0");
    if (!(ue_speed >= 0.0)) throw std::invalid_argument("config: ue_speed must be >= 0");
    if (!robot_start.empty() && static_cast<int>(robot_start.size()) != uav_count)
        throw std::invalid_argument("config: robot_start length must equal uav_count");
    if (!ue_goals.empty() && ue_goals.size() != initial_ues().positions.size())
        throw std::invalid_argument("config: ue_goals length must equal ue_start length");
    channel.validate();
}

std::vector<RobotState> ScenarioConfig::initial_states() const {
    if (!robot_start.empty()) return robot_start;

    // Distinct 1 m lattice cells around the origin, sampled from the seed.
    // The 1 m spacing keeps every initial pair at or above the channel's
    // minimum effective distance.
    Rng rng(derive_seed(seed, kStreamInit));
    const int radius = std::max(1, static_cast<int>(std::ceil(std::sqrt(uav_count))));
    const int side = 2 * radius + 1;
    std::vector<char> taken(static_cast<std::size_t>(side) * side, 0);
    std::vector<RobotState> states;
    states.reserve(uav_count);
    while (static_cast<int>(states.size()) < uav_count) {
        const int ix = static_cast<int>(rng.uniform_index(side));
        const int iy = static_cast<int>(rng.uniform_index(side));
        char& cell = taken[static_cast<std::size_t>(iy) * side + ix];
        if (cell) continue;
        cell = 1;
        RobotState s;
        s.position = {static_cast<double>(ix - radius), static_cast<double>(iy - radius)};
        states.push_back(s);
    }
    return states;
}

UeTeam ScenarioConfig::initial_ues() const {
    UeTeam team;
    if (ue_start.empty()) {
        // Default: five UEs on a 20 m ring.
        constexpr int kDefaultUes = 5;
        constexpr double kRadius = 20.0;
        constexpr double kTwoPi = 6.283185307179586476925286766559;
        for (int i = 0; i < kDefaultUes; ++i) {
            const double angle = kTwoPi * i / kDefaultUes;
            team.positions.push_back({kRadius * std::cos(angle), kRadius * std::sin(angle)});
        }
    } else {
        team.positions = ue_start;
    }
    team.goals = ue_goals.empty() ? team.positions : ue_goals;
    team.speed = ue_speed;
    return team;
}

double StepRecord::mean_ue_rss() const { return mean_of(ue_best_rss_dbm); }

double StepRecord::min_ue_rss() const {
    if (ue_best_rss_dbm.empty()) return 0.0;
    return *std::min_element(ue_best_rss_dbm.begin(), ue_best_rss_dbm.end());
}

double StepRecord::mean_payoff() const { return mean_of(robot_payoffs); }

std::vector<double> ue_rss_metric(const std::vector<Vec2>& robot_positions,
                                  const std::vector<Vec2>& ue_positions,
                                  const ChannelParams& params, Rng& rng) {
    if (robot_positions.empty()) throw std::invalid_argument("ue_rss_metric: need >= 1 robot");
    std::vector<double> best(ue_positions.size(),
                             -std::numeric_limits<double>::infinity());
    for (std::size_t u = 0; u < ue_positions.size(); ++u)
        for (const Vec2& robot : robot_positions)
            best[u] = std::max(best[u], sample_rss(robot, ue_positions[u], params, rng));
    return best;
}

SimTrace run(const ScenarioConfig& config) {
    config.validate();

    SimTrace trace;
    trace.config = config;

    std::vector<RobotState> states = config.initial_states();
    UeTeam ues = config.initial_ues();
    const ActionSet action_set = build_action_set(config.a_max, config.action_levels);

    const int steps = config.step_count();
    trace.steps.reserve(steps);
    std::optional<MarginalSet> previous_marginals;

    for (int step = 0; step < steps; ++step) {
        std::vector<Vec2> positions(states.size());
        for (std::size_t i = 0; i < states.size(); ++i) positions[i] = states[i].position;

        Rng link_rng(derive_seed(config.seed, kStreamLinks, step));
        const LinkGraph graph = build_link_graph(positions, config.channel, link_rng);
        const RoutingTables routing = compute_routing_tables(graph);

        const auto t0 = std::chrono::steady_clock::now();

        const auto [mean, cov] = ellipsoid_from_ues(ues.positions);
        const RoiGrid grid = build_grid(mean, cov, config.cell_size_m, config.mahalanobis_cut);

        StageGame game =
            (config.controller == ControllerKind::Coco)
                ? build_stage_game(states, routing, config.k, grid, config.channel,
                                   config.weights, action_set, config.dt)
                : build_stage_game_from_neighborhoods(
                      states, disk_neighborhood(positions, config.disk_radius_m), grid,
                      config.channel, config.weights, action_set, config.dt);

        auto [marginals, report] = optimize_stage(
            game, config.tol, config.max_sweeps,
            config.warm_start ? previous_marginals : std::nullopt);

        const auto t1 = std::chrono::steady_clock::now();

        StepRecord record;
        record.actions.resize(game.player_count);
        for (int i = 0; i < game.player_count; ++i)
            record.actions[i] = select_action(marginals.q[i]);

        record.robot_payoffs.resize(game.player_count);
        for (int i = 0; i < game.player_count; ++i)
            record.robot_payoffs[i] = payoff(i, record.actions, game);

        for (int i = 0; i < game.player_count; ++i)
            states[i] = coco::step(states[i], action_set.actions[record.actions[i]], config.dt,
                                   config.v_max);
        ues = advance_ues(ues, config.dt);

        record.robots = states;
        record.ue_positions = ues.positions;
        record.connected = is_connected(graph);
        record.neighborhood_sizes.resize(game.player_count);
        for (int i = 0; i < game.player_count; ++i)
            record.neighborhood_sizes[i] = static_cast<int>(game.neighborhoods[i].size());

        int reachable = 0;
        double hop_sum = 0.0;
        for (int i = 0; i < routing.node_count; ++i) {
            for (int j = i + 1; j < routing.node_count; ++j) {
                if (!routing.hops[i][j].has_value()) continue;
                ++reachable;
                hop_sum += *routing.hops[i][j];
            }
        }
        record.reachable_pairs = reachable;
        record.mean_finite_hops = reachable > 0 ? hop_sum / reachable : 0.0;

        std::vector<Vec2> robot_positions(states.size());
        for (std::size_t i = 0; i < states.size(); ++i) robot_positions[i] = states[i].position;
        Rng ue_rng(derive_seed(config.seed, kStreamUeRss, step));
        record.ue_best_rss_dbm =
            ue_rss_metric(robot_positions, ues.positions, config.channel, ue_rng);

        record.solver_sweeps = report.sweeps;
        record.solver_converged = report.converged;
        record.solver_delta = report.final_delta;
        record.stage_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();

        previous_marginals = std::move(marginals);
        trace.steps.push_back(std::move(record));
    }
    return trace;
}

SweepAxis SweepAxis::parse(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("sweep axis: expected <axis>=<v1,v2,...> in '" + spec + "'");
    const std::string name = spec.substr(0, eq);
    SweepAxis axis;
    if (name == "k") {
        axis.kind = Kind::HopCount;
    } else if (name == "uav_count") {
        axis.kind = Kind::UavCount;
    } else if (name == "controller") {
        axis.kind = Kind::Controller;
    } else {
        throw std::invalid_argument("sweep axis: unknown axis '" + name +
                                    "' (expected k, uav_count, or controller)");
    }
    std::string rest = spec.substr(eq + 1);
    std::size_t pos = 0;
    while (pos != std::string::npos && pos < rest.size()) {
        const auto comma = rest.find(',', pos);
        const std::string token = rest.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!token.empty()) axis.values.push_back(token);
        pos = (comma == std::string::npos) ? std::string::npos : comma + 1;
    }
    if (axis.values.empty())
        throw std::invalid_argument("sweep axis: no values in '" + spec + "'");
    return axis;
}

std::string SweepAxis::name() const {
    switch (kind) {
        case Kind::HopCount: return "k";
        case Kind::UavCount: return "uav_count";
        case Kind::Controller: return "controller";
    }
    return "?";
}

SweepResult sweep(const ScenarioConfig& base, const SweepAxis& axis, int trials) {
    if (trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
    SweepResult result;
    result.axis = axis;
    result.trials = trials;

    for (std::size_t combo = 0; combo < axis.values.size(); ++combo) {
        const std::string& value = axis.values[combo];
        ScenarioConfig config = base;
        switch (axis.kind) {
            case SweepAxis::Kind::HopCount:
                config.k = std::stoi(value);
                break;
            case SweepAxis::Kind::UavCount:
                config.uav_count = std::stoi(value);
                config.robot_start.clear();  // re-place for the new count
                break;
            case SweepAxis::Kind::Controller:
                if (value == "coco") {
                    config.controller = ControllerKind::Coco;
                } else if (value == "disk") {
                    config.controller = ControllerKind::Disk;
                } else {
                    throw std::invalid_argument("sweep: unknown controller '" + value + "'");
                }
                break;
        }

        SweepGroup group;
        group.label = axis.name() + "=" + value;
        for (int trial = 0; trial < trials; ++trial) {
            config.seed = derive_seed(base.seed, combo + 1, trial + 1);
            const SimTrace trace = run(config);
            std::vector<double> rss_series, payoff_series;
            rss_series.reserve(trace.steps.size());
            payoff_series.reserve(trace.steps.size());
            for (const StepRecord& s : trace.steps) {
                rss_series.push_back(s.mean_ue_rss());
                payoff_series.push_back(s.mean_payoff());
            }
            group.trial_mean_ue_rss.push_back(std::move(rss_series));
            group.trial_mean_payoff.push_back(std::move(payoff_series));
        }

        const std::size_t step_count = group.trial_mean_ue_rss.front().size();
        group.mean_ue_rss.resize(step_count);
        group.stderr_ue_rss.resize(step_count);
        group.mean_payoff.resize(step_count);
        group.stderr_payoff.resize(step_count);
        std::vector<double> column(trials);
        for (std::size_t s = 0; s < step_count; ++s) {
            for (int t = 0; t < trials; ++t) column[t] = group.trial_mean_ue_rss[t][s];
            group.mean_ue_rss[s] = mean_of(column);
            group.stderr_ue_rss[s] = stderr_of(column);
            for (int t = 0; t < trials; ++t) column[t] = group.trial_mean_payoff[t][s];
            group.mean_payoff[s] = mean_of(column);
            group.stderr_payoff[s] = stderr_of(column);
        }
        result.groups.push_back(std::move(group));
    }
    return result;
}

}  // namespace coco
