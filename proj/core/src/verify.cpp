#include "coco/verify.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "coco/rng.hpp"

namespace coco {

namespace {

/// Enumerates every joint action of the game, invoking fn(joint).
template <typename Fn>
void for_each_joint(int players, int actions, Fn&& fn) {
    std::vector<int> joint(players, 0);
    while (true) {
        fn(joint);
        int pos = 0;
        for (; pos < players; ++pos) {
            if (++joint[pos] < actions) break;
            joint[pos] = 0;
        }
        if (pos == players) return;
    }
}

}  // namespace

StageGame make_random_instance(std::uint64_t instance_seed, int max_players, int max_actions) {
    Rng rng(derive_seed(instance_seed, 0x1157a9ceULL));

    const int players = 1 + static_cast<int>(rng.uniform_index(max_players));
    const int actions = 1 + static_cast<int>(rng.uniform_index(max_actions));

    // Robots scattered over a region small enough for multi-hop topologies.
    const double spread = rng.uniform(30.0, 150.0);
    std::vector<RobotState> states(players);
    for (auto& s : states) {
        s.position = {rng.uniform(-spread, spread), rng.uniform(-spread, spread)};
        s.velocity = {rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    }

    // Arbitrary (not grid-structured) action list keeps the solver honest
    // about action counts that are not perfect squares.
    ActionSet action_set;
    action_set.a_max = 3.0;
    action_set.levels_per_axis = 0;
    action_set.actions.resize(actions);
    for (auto& a : action_set.actions) a = {rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};

    // A couple of UEs define the ROI.
    const int ue_count = 2 + static_cast<int>(rng.uniform_index(4));
    std::vector<Vec2> ues(ue_count);
    for (auto& u : ues) u = {rng.uniform(-spread, spread), rng.uniform(-spread, spread)};
    const auto [mean, cov] = ellipsoid_from_ues(ues);
    const RoiGrid grid = build_grid(mean, cov, 10.0, 3.0);

    ChannelParams channel;
    PayoffWeights weights;
    weights.alpha_a = rng.uniform(0.5, 2.0);
    weights.alpha_b = rng.uniform(0.0005, 0.01);

    // Live neighborhoods from a sampled topology.
    std::vector<Vec2> positions(players);
    for (int i = 0; i < players; ++i) positions[i] = states[i].position;
    Rng link_rng(derive_seed(instance_seed, 0x11aa55ULL));
    const LinkGraph links = build_link_graph(positions, channel, link_rng);
    const RoutingTables routing = compute_routing_tables(links);
    const int k = 1 + static_cast<int>(rng.uniform_index(3));

    return build_stage_game(states, routing, k, grid, channel, weights, action_set, 1.0);
}

InstanceResult verify_instance(const StageGame& game, const VerifyOptions& options,
                               std::uint64_t instance_seed) {
    InstanceResult result;
    result.instance_seed = instance_seed;
    result.players = game.player_count;
    result.actions = game.action_count();

    // Exponential-family identity: the product of clique potentials must
    // equal the exponential of the joint density exponent. Compared through
    // the log-space difference, whose expm1 is exactly the relative error of
    // the products.
    const auto cliques = game.cliques();
    double max_family_error = 0.0;
    for_each_joint(game.player_count, game.action_count(), [&](const std::vector<int>& joint) {
        double clique_sum = 0.0;
        for (const Clique& c : cliques) {
            double value = log_potential(c, joint, game);
            if (options.inject_pair_sign_flip && c.kind == Clique::Kind::Pair) value = -value;
            clique_sum += value;
        }
        const double density = joint_unnormalized_log_density(joint, game);
        const double rel_error = std::abs(std::expm1(clique_sum - density));
        max_family_error = std::max(max_family_error, rel_error);
    });
    result.max_family_error = max_family_error;
    result.family_ok = max_family_error <= options.family_epsilon;

    // Monotone ascent, checked after every single coordinate update.
    MarginalSet marginals = init_marginals(game);
    double energy = variational_energy(marginals, game);
    double worst_drop = 0.0;
    bool converged = false;
    for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
        double delta = 0.0;
        for (int i = 0; i < game.player_count; ++i) {
            std::vector<double> updated = update_marginal(i, marginals, game);
            for (std::size_t x = 0; x < updated.size(); ++x)
                delta = std::max(delta, std::abs(updated[x] - marginals.q[i][x]));
            marginals.q[i] = std::move(updated);
            const double next_energy = variational_energy(marginals, game);
            worst_drop = std::max(worst_drop, energy - next_energy);
            energy = next_energy;
        }
        converged = delta < options.solver_tol;
    }
    result.worst_ascent_drop = worst_drop;
    result.ascent_ok = worst_drop <= options.energy_epsilon;
    result.converged = converged;

    // Equilibrium checks against brute-force expected payoffs.
    const EquilibriumReport eq =
        verify_equilibrium(marginals, game, options.identity_epsilon, converged);
    result.equilibrium_ok = eq.all_passed;
    for (const auto& pr : eq.players)
        result.max_identity_error = std::max(result.max_identity_error, pr.max_identity_error);

    return result;
}

std::vector<InstanceResult> run_verification(const VerifyOptions& options, std::ostream& out) {
    std::vector<InstanceResult> results;
    results.reserve(options.instance_count);
    int failures = 0;
    for (int idx = 0; idx < options.instance_count; ++idx) {
        const std::uint64_t instance_seed = derive_seed(options.seed, 0x9e5ULL, idx);
        const StageGame game =
            make_random_instance(instance_seed, options.max_players, options.max_actions);
        const InstanceResult r = verify_instance(game, options, instance_seed);
        results.push_back(r);
        if (!r.ok()) ++failures;

        char line[256];
        std::snprintf(line, sizeof(line),
                      "[%s] instance %3d seed=%016llx players=%d actions=%d "
                      "family=%s ascent=%s converged=%s equilibrium=%s",
                      r.ok() ? "PASS" : "FAIL", idx,
                      static_cast<unsigned long long>(instance_seed), r.players, r.actions,
                      r.family_ok ? "ok" : "BAD", r.ascent_ok ? "ok" : "BAD",
                      r.converged ? "yes" : "NO", r.equilibrium_ok ? "ok" : "BAD");
        out << line << "\n";
    }
    out << (failures == 0 ? "verification passed" : "verification FAILED") << " ("
        << (options.instance_count - failures) << "/" << options.instance_count
        << " instances)\n";
    return results;
}

}  // namespace coco
