#pragma once

#include <optional>
#include <span>
#include <vector>

#include "coco/game.hpp"

namespace coco {

/// Per-player mixed strategies: q[i] is a probability vector over the shared
/// action set. This is both the solver state and the game solution.
struct MarginalSet {
    std::vector<std::vector<double>> q;

    int player_count() const { return static_cast<int>(q.size()); }
};

/// Outcome of one stage optimization.
struct SolveReport {
    int sweeps = 0;
    bool converged = false;
    double final_delta = 0.0;           ///< max marginal change of the last sweep
    std::vector<double> energy_trace;   ///< variational energy after init + each sweep
};

/// Initial marginals: per player, softmax over actions of
/// alpha_a * psi_C(x_i) (the unary potential alone).
MarginalSet init_marginals(const StageGame& game);

/// Coordinate-ascent update of player i's marginal with neighbors fixed:
/// softmax over x_i of alpha_a*psi_C(x_i) + sum_{j in N_i} E_{q_j}[alpha_b*psi_R(x_i, x_j)].
std::vector<double> update_marginal(int i, const MarginalSet& marginals, const StageGame& game);

/// Round-robin sweeps of update_marginal over ascending player index until
/// the largest marginal change over a sweep drops below tol or max_sweeps is
/// reached. Non-convergence is reported, never thrown. An optional warm
/// start replaces the unary-potential initialization.
std::pair<MarginalSet, SolveReport> optimize_stage(
    const StageGame& game, double tol = 1e-6, int max_sweeps = 100,
    const std::optional<MarginalSet>& warm_start = std::nullopt);

/// Index of the most probable action; ties break to the lowest index.
int select_action(std::span<const double> q_i);

/// Variational energy of a product distribution over the stage game MRF:
/// sum of per-player entropies plus expected log-potentials, each clique
/// counted once.
double variational_energy(const MarginalSet& marginals, const StageGame& game);

/// Equilibrium verification for one player.
struct PlayerEquilibriumReport {
    int player = 0;
    bool applicable = true;      ///< false when marginals were not converged
    bool enumerated = true;      ///< false when expectations were sampled
    double max_identity_error = 0.0;  ///< worst |log-ratio - payoff-difference|
    int ordering_violations = 0;      ///< CE ordering failures beyond epsilon
    bool passed = false;
};

struct EquilibriumReport {
    std::vector<PlayerEquilibriumReport> players;
    bool all_passed = false;
};

/// Checks, per player and action pair, (a) the fixed-point identity
/// ln q_i(x) - ln q_i(x') = E[M_i(x, .)] - E[M_i(x', .)] within epsilon and
/// (b) the equilibrium ordering q_i(x) >= q_i(x') implies
/// E[M_i(x, .)] >= E[M_i(x', .)] - epsilon.
///
/// Expected payoffs are brute-forced by enumerating all neighbor joint
/// actions under the product of the neighbors' marginals; when that joint
/// space exceeds the enumeration budget the expectation is estimated from
/// fixed-seed samples instead. Setting converged = false marks every player
/// report not applicable.
EquilibriumReport verify_equilibrium(const MarginalSet& marginals, const StageGame& game,
                                     double epsilon, bool converged = true);

}  // namespace coco
