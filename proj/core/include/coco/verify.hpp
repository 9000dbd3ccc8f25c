#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "coco/game.hpp"
#include "coco/mfvi.hpp"

namespace coco {

/// Options for the randomized property suite over small stage games.
struct VerifyOptions {
    int instance_count = 100;
    std::uint64_t seed = 1;
    int max_players = 4;
    int max_actions = 4;
    double identity_epsilon = 1e-6;  ///< equilibrium checks
    double energy_epsilon = 1e-8;    ///< monotone-ascent slack
    double family_epsilon = 1e-9;    ///< exponential-family relative error
    double solver_tol = 1e-9;
    int max_sweeps = 200;
    /// Test hook: negate the pairwise potential inside the density oracle,
    /// which must break the exponential-family identity.
    bool inject_pair_sign_flip = false;
};

/// One randomly generated small stage game (players, actions, geometry and
/// weights all drawn from the instance seed).
StageGame make_random_instance(std::uint64_t instance_seed, int max_players = 4,
                               int max_actions = 4);

struct InstanceResult {
    std::uint64_t instance_seed = 0;
    int players = 0;
    int actions = 0;
    bool family_ok = false;       ///< clique product equals the joint density
    bool ascent_ok = false;       ///< variational energy never decreases
    bool converged = false;
    bool equilibrium_ok = false;  ///< fixed-point identity + CE ordering
    double max_family_error = 0.0;
    double worst_ascent_drop = 0.0;
    double max_identity_error = 0.0;

    bool ok() const { return family_ok && ascent_ok && converged && equilibrium_ok; }
};

/// Runs the three property checks on one instance.
InstanceResult verify_instance(const StageGame& game, const VerifyOptions& options,
                               std::uint64_t instance_seed);

/// Generates options.instance_count instances, verifies each, and prints a
/// pass/fail table. Returns the per-instance results.
std::vector<InstanceResult> run_verification(const VerifyOptions& options, std::ostream& out);

}  // namespace coco
