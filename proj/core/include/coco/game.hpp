#pragma once

#include <span>
#include <vector>

#include "coco/channel.hpp"
#include "coco/dynamics.hpp"
#include "coco/netsim.hpp"
#include "coco/roi.hpp"

namespace coco {

/// Payoff weights: alpha_a scales the cooperative coverage term, alpha_b the
/// pairwise expected-RSS term.
struct PayoffWeights {
    double alpha_a = 1.0;
    double alpha_b = 0.001;
};

enum class EdgeKind { Original, Auxiliary };

/// Undirected edge of the derived game graph, stored once with a < b.
/// Original edges come from the neighborhood relation and carry weight
/// alpha_b; auxiliary edges complete each neighborhood into a clique and
/// carry weight zero.
struct GameEdge {
    int a = 0;
    int b = 0;
    EdgeKind kind = EdgeKind::Original;
};

/// Clique of the derived graph: either the neighborhood clique anchored at a
/// player (whose potential depends only on that player's action) or a pair.
struct Clique {
    enum class Kind { Neighborhood, Pair } kind = Kind::Neighborhood;
    int i = 0;
    int j = -1;  ///< second member for pairs
};

/// One-timestep graphical game over the robot swarm.
///
/// Construction freezes everything the per-step optimization needs: the
/// neighborhoods, the derived graph with auxiliary completion, the predicted
/// position of every (player, action), the fixed coverage field contributed
/// by each player's neighbors at their current positions, and the per-player
/// coverage table over actions.
struct StageGame {
    int player_count = 0;
    ActionSet action_set;
    std::vector<RobotState> states;
    std::vector<std::vector<int>> neighborhoods;  ///< sorted, excludes self
    std::vector<GameEdge> edges;                  ///< sorted by (a, b)
    PayoffWeights weights;
    ChannelParams channel;
    RoiGrid grid;
    double dt = 1.0;

    /// predicted[i][x]: position of player i after playing action x.
    std::vector<std::vector<Vec2>> predicted;
    /// fixed_field[i][r]: best expected RSS any neighbor of i provides to
    /// cell r from its current position; -inf with no neighbors.
    std::vector<std::vector<double>> fixed_field;
    /// coverage[i][x]: precomputed cooperative coverage value psi_C.
    std::vector<std::vector<double>> coverage;

    /// pair_rss[e]: for original edge e = (a, b), expected RSS for every
    /// (x_a, x_b) action pair, indexed x_a * |actions| + x_b. Empty for
    /// auxiliary edges.
    std::vector<std::vector<double>> pair_rss;

    int action_count() const { return action_set.size(); }
    int edge_index(int a, int b) const;  ///< -1 if absent; arguments any order

    /// All cliques: one neighborhood clique per player, then every edge.
    std::vector<Clique> cliques() const;

    /// Dense (player_count x player_count) edge index, -1 where absent.
    std::vector<int> edge_lookup;
};

/// Builds the stage game from live routing tables (k-hop neighborhoods).
StageGame build_stage_game(const std::vector<RobotState>& states, const RoutingTables& routing,
                           int k, const RoiGrid& grid, const ChannelParams& params,
                           const PayoffWeights& weights, const ActionSet& action_set, double dt);

/// Same construction from externally supplied neighborhoods (disk baseline,
/// synthetic instances). Neighborhoods must be symmetric and self-free.
StageGame build_stage_game_from_neighborhoods(const std::vector<RobotState>& states,
                                              std::vector<std::vector<int>> neighborhoods,
                                              const RoiGrid& grid, const ChannelParams& params,
                                              const PayoffWeights& weights,
                                              const ActionSet& action_set, double dt);

/// Cooperative coverage of player i playing action x_i: the probability-
/// weighted sum over ROI cells of the best expected RSS available from i's
/// predicted position or from its neighbors' fixed field.
double coverage_psi_c(int i, int action, const StageGame& game);

/// Expected RSS between the predicted positions of i playing x_i and j
/// playing x_j. Symmetric under swapping the (player, action) pairs.
double pairwise_psi_r(int i, int action_i, int j, int action_j, const StageGame& game);

/// Player i's payoff under a full joint action:
///   alpha_a * psi_C(x_i) + alpha_b * sum_{j in N_i} psi_R(x_i, x_j).
double payoff(int i, std::span<const int> joint_action, const StageGame& game);

/// Log factor potential of one clique under a full joint action.
/// Neighborhood clique of i -> alpha_a * psi_C(x_i); original pair ->
/// alpha_b * psi_R; auxiliary pair -> 0. Unknown cliques are rejected.
double log_potential(const Clique& clique, std::span<const int> joint_action,
                     const StageGame& game);

/// Exponent of the joint MRF density:
///   alpha_a * sum_i psi_C(x_i) + alpha_b * sum_{(i,j) original} psi_R,
/// each original edge counted once.
double joint_unnormalized_log_density(std::span<const int> joint_action, const StageGame& game);

}  // namespace coco
