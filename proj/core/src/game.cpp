#include "coco/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

namespace coco {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

StageGame assemble(const std::vector<RobotState>& states,
                   std::vector<std::vector<int>> neighborhoods, const RoiGrid& grid,
                   const ChannelParams& params, const PayoffWeights& weights,
                   const ActionSet& action_set, double dt) {
    const int n = static_cast<int>(states.size());
    StageGame game;
    game.player_count = n;
    game.action_set = action_set;
    game.states = states;
    game.neighborhoods = std::move(neighborhoods);
    game.weights = weights;
    game.channel = params;
    game.grid = grid;
    game.dt = dt;

    for (auto& nb : game.neighborhoods) std::sort(nb.begin(), nb.end());

    // Original edges: (i, j) for every j in N_i. Auxiliary edges complete
    // each neighborhood clique N_i + {i}; since (i, j) is already original
    // for every neighbor, only pairs inside N_i can be auxiliary.
    std::set<std::pair<int, int>> original;
    for (int i = 0; i < n; ++i)
        for (int j : game.neighborhoods[i]) original.insert(std::minmax(i, j));

    std::set<std::pair<int, int>> auxiliary;
    for (int i = 0; i < n; ++i) {
        const auto& nb = game.neighborhoods[i];
        for (std::size_t u = 0; u < nb.size(); ++u) {
            for (std::size_t v = u + 1; v < nb.size(); ++v) {
                const auto pair = std::minmax(nb[u], nb[v]);
                if (!original.count(pair)) auxiliary.insert(pair);
            }
        }
    }
    for (const auto& [a, b] : original) game.edges.push_back({a, b, EdgeKind::Original});
    for (const auto& [a, b] : auxiliary) game.edges.push_back({a, b, EdgeKind::Auxiliary});
    std::sort(game.edges.begin(), game.edges.end(),
              [](const GameEdge& l, const GameEdge& r) { return std::tie(l.a, l.b) < std::tie(r.a, r.b); });

    game.edge_lookup.assign(static_cast<std::size_t>(n) * n, -1);
    for (std::size_t e = 0; e < game.edges.size(); ++e) {
        const auto& edge = game.edges[e];
        game.edge_lookup[static_cast<std::size_t>(edge.a) * n + edge.b] = static_cast<int>(e);
        game.edge_lookup[static_cast<std::size_t>(edge.b) * n + edge.a] = static_cast<int>(e);
    }

    // Predicted position per (player, action).
    const int m = game.action_count();
    game.predicted.assign(n, std::vector<Vec2>(m));
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < m; ++x)
            game.predicted[i][x] = predict_position(states[i], action_set.actions[x], dt);

    // Fixed coverage field: neighbors evaluated at their current positions.
    const int cells = static_cast<int>(grid.cells.size());
    game.fixed_field.assign(n, std::vector<double>(cells, kNegInf));
    for (int i = 0; i < n; ++i) {
        for (int j : game.neighborhoods[i]) {
            for (int r = 0; r < cells; ++r) {
                const double rss = expected_rss(states[j].position, grid.cells[r].center, params);
                game.fixed_field[i][r] = std::max(game.fixed_field[i][r], rss);
            }
        }
    }

    // Coverage table over actions.
    game.coverage.assign(n, std::vector<double>(m, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int x = 0; x < m; ++x) {
            double sum = 0.0;
            for (int r = 0; r < cells; ++r) {
                const double own =
                    expected_rss(game.predicted[i][x], grid.cells[r].center, params);
                sum += std::max(own, game.fixed_field[i][r]) * grid.cells[r].probability;
            }
            game.coverage[i][x] = sum;
        }
    }

    // Expected RSS table per original edge over action pairs.
    game.pair_rss.resize(game.edges.size());
    for (std::size_t e = 0; e < game.edges.size(); ++e) {
        if (game.edges[e].kind != EdgeKind::Original) continue;
        const int a = game.edges[e].a;
        const int b = game.edges[e].b;
        auto& table = game.pair_rss[e];
        table.resize(static_cast<std::size_t>(m) * m);
        for (int xa = 0; xa < m; ++xa)
            for (int xb = 0; xb < m; ++xb)
                table[static_cast<std::size_t>(xa) * m + xb] =
                    expected_rss(game.predicted[a][xa], game.predicted[b][xb], params);
    }
    return game;
}

}  // namespace

int StageGame::edge_index(int a, int b) const {
    if (a < 0 || b < 0 || a >= player_count || b >= player_count) return -1;
    return edge_lookup[static_cast<std::size_t>(a) * player_count + b];
}

std::vector<Clique> StageGame::cliques() const {
    std::vector<Clique> result;
    result.reserve(static_cast<std::size_t>(player_count) + edges.size());
    for (int i = 0; i < player_count; ++i) result.push_back({Clique::Kind::Neighborhood, i, -1});
    for (const GameEdge& e : edges) result.push_back({Clique::Kind::Pair, e.a, e.b});
    return result;
}

StageGame build_stage_game(const std::vector<RobotState>& states, const RoutingTables& routing,
                           int k, const RoiGrid& grid, const ChannelParams& params,
                           const PayoffWeights& weights, const ActionSet& action_set, double dt) {
    if (routing.node_count != static_cast<int>(states.size()))
        throw std::invalid_argument("build_stage_game: routing tables cover a different node set");
    std::vector<std::vector<int>> neighborhoods(states.size());
    for (int i = 0; i < routing.node_count; ++i)
        neighborhoods[i] = k_hop_neighborhood(routing, i, k);
    return assemble(states, std::move(neighborhoods), grid, params, weights, action_set, dt);
}

StageGame build_stage_game_from_neighborhoods(const std::vector<RobotState>& states,
                                              std::vector<std::vector<int>> neighborhoods,
                                              const RoiGrid& grid, const ChannelParams& params,
                                              const PayoffWeights& weights,
                                              const ActionSet& action_set, double dt) {
    if (neighborhoods.size() != states.size())
        throw std::invalid_argument("build_stage_game: neighborhoods cover a different node set");
    return assemble(states, std::move(neighborhoods), grid, params, weights, action_set, dt);
}

double coverage_psi_c(int i, int action, const StageGame& game) {
    return game.coverage.at(i).at(action);
}

double pairwise_psi_r(int i, int action_i, int j, int action_j, const StageGame& game) {
    if (i == j) throw std::invalid_argument("pairwise_psi_r: players must differ");
    const int e = game.edge_index(i, j);
    const int m = game.action_count();
    if (e >= 0 && !game.pair_rss[e].empty()) {
        const int xa = (i < j) ? action_i : action_j;
        const int xb = (i < j) ? action_j : action_i;
        return game.pair_rss[e][static_cast<std::size_t>(xa) * m + xb];
    }
    return expected_rss(game.predicted[i][action_i], game.predicted[j][action_j], game.channel);
}

double payoff(int i, std::span<const int> joint_action, const StageGame& game) {
    double value = game.weights.alpha_a * coverage_psi_c(i, joint_action[i], game);
    for (int j : game.neighborhoods[i])
        value +=
            game.weights.alpha_b * pairwise_psi_r(i, joint_action[i], j, joint_action[j], game);
    return value;
}

double log_potential(const Clique& clique, std::span<const int> joint_action,
                     const StageGame& game) {
    switch (clique.kind) {
        case Clique::Kind::Neighborhood:
            if (clique.i < 0 || clique.i >= game.player_count)
                throw std::invalid_argument("log_potential: unknown player");
            return game.weights.alpha_a * coverage_psi_c(clique.i, joint_action[clique.i], game);
        case Clique::Kind::Pair: {
            const int e = game.edge_index(clique.i, clique.j);
            if (e < 0) throw std::invalid_argument("log_potential: pair is not an edge");
            if (game.edges[e].kind == EdgeKind::Auxiliary) return 0.0;
            return game.weights.alpha_b *
                   pairwise_psi_r(clique.i, joint_action[clique.i], clique.j,
                                  joint_action[clique.j], game);
        }
    }
    throw std::invalid_argument("log_potential: unknown clique kind");
}

double joint_unnormalized_log_density(std::span<const int> joint_action, const StageGame& game) {
    double value = 0.0;
    for (int i = 0; i < game.player_count; ++i)
        value += game.weights.alpha_a * coverage_psi_c(i, joint_action[i], game);
    for (const GameEdge& e : game.edges) {
        if (e.kind != EdgeKind::Original) continue;
        value += game.weights.alpha_b *
                 pairwise_psi_r(e.a, joint_action[e.a], e.b, joint_action[e.b], game);
    }
    return value;
}

}  // namespace coco
