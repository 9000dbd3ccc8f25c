#include "coco/mfvi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "coco/rng.hpp"

namespace coco {

namespace {

/// Softmax with max-subtraction; scores at dBm magnitudes stay stable.
std::vector<double> softmax(const std::vector<double>& scores) {
    const double peak = *std::max_element(scores.begin(), scores.end());
    std::vector<double> out(scores.size());
    double total = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        out[i] = std::exp(scores[i] - peak);
        total += out[i];
    }
    for (double& v : out) v /= total;
    return out;
}

/// Scores s(x_i) = alpha_a*psi_C(x_i) + sum_{j in N_i} E_{q_j}[alpha_b*psi_R].
/// The softmax of these scores is the coordinate-ascent update, and the
/// scores themselves equal the expected payoff of each action under the
/// neighbors' current marginals.
std::vector<double> conditional_scores(int i, const MarginalSet& marginals,
                                       const StageGame& game) {
    const int m = game.action_count();
    std::vector<double> scores(m);
    for (int x = 0; x < m; ++x) scores[x] = game.weights.alpha_a * coverage_psi_c(i, x, game);
    for (int j : game.neighborhoods[i]) {
        const auto& qj = marginals.q[j];
        for (int x = 0; x < m; ++x) {
            double expectation = 0.0;
            for (int xj = 0; xj < m; ++xj)
                expectation += qj[xj] * pairwise_psi_r(i, x, j, xj, game);
            scores[x] += game.weights.alpha_b * expectation;
        }
    }
    return scores;
}

double entropy(const std::vector<double>& q) {
    double h = 0.0;
    for (double p : q)
        if (p > 0.0) h -= p * std::log(p);
    return h;
}

}  // namespace

MarginalSet init_marginals(const StageGame& game) {
    MarginalSet marginals;
    marginals.q.resize(game.player_count);
    const int m = game.action_count();
    for (int i = 0; i < game.player_count; ++i) {
        std::vector<double> scores(m);
        for (int x = 0; x < m; ++x) scores[x] = game.weights.alpha_a * coverage_psi_c(i, x, game);
        marginals.q[i] = softmax(scores);
    }
    return marginals;
}

std::vector<double> update_marginal(int i, const MarginalSet& marginals, const StageGame& game) {
    return softmax(conditional_scores(i, marginals, game));
}

std::pair<MarginalSet, SolveReport> optimize_stage(const StageGame& game, double tol,
                                                   int max_sweeps,
                                                   const std::optional<MarginalSet>& warm_start) {
    if (!(tol > 0.0)) throw std::invalid_argument("optimize_stage: tol must be > 0");
    MarginalSet marginals = warm_start.has_value() ? *warm_start : init_marginals(game);

    SolveReport report;
    report.energy_trace.push_back(variational_energy(marginals, game));

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double delta = 0.0;
        for (int i = 0; i < game.player_count; ++i) {
            std::vector<double> updated = update_marginal(i, marginals, game);
            for (std::size_t x = 0; x < updated.size(); ++x)
                delta = std::max(delta, std::abs(updated[x] - marginals.q[i][x]));
            marginals.q[i] = std::move(updated);
        }
        ++report.sweeps;
        report.final_delta = delta;
        report.energy_trace.push_back(variational_energy(marginals, game));
        if (delta < tol) {
            report.converged = true;
            break;
        }
    }
    return {std::move(marginals), report};
}

int select_action(std::span<const double> q_i) {
    if (q_i.empty()) throw std::invalid_argument("select_action: empty distribution");
    int best = 0;
    for (int x = 1; x < static_cast<int>(q_i.size()); ++x)
        if (q_i[x] > q_i[best]) best = x;
    return best;
}

double variational_energy(const MarginalSet& marginals, const StageGame& game) {
    const int m = game.action_count();
    double energy = 0.0;
    for (int i = 0; i < game.player_count; ++i) {
        energy += entropy(marginals.q[i]);
        for (int x = 0; x < m; ++x)
            energy += marginals.q[i][x] * game.weights.alpha_a * coverage_psi_c(i, x, game);
    }
    for (const GameEdge& e : game.edges) {
        if (e.kind != EdgeKind::Original) continue;
        for (int xa = 0; xa < m; ++xa) {
            const double qa = marginals.q[e.a][xa];
            if (qa == 0.0) continue;
            for (int xb = 0; xb < m; ++xb) {
                const double w = qa * marginals.q[e.b][xb];
                if (w == 0.0) continue;
                energy += w * game.weights.alpha_b * pairwise_psi_r(e.a, xa, e.b, xb, game);
            }
        }
    }
    return energy;
}

EquilibriumReport verify_equilibrium(const MarginalSet& marginals, const StageGame& game,
                                     double epsilon, bool converged) {
    constexpr std::uint64_t kEnumerationBudget = 1'000'000;
    constexpr int kSampleCount = 100'000;

    EquilibriumReport report;
    report.players.resize(game.player_count);
    bool all = true;

    for (int i = 0; i < game.player_count; ++i) {
        PlayerEquilibriumReport& pr = report.players[i];
        pr.player = i;
        if (!converged) {
            pr.applicable = false;
            pr.passed = false;
            all = false;
            continue;
        }

        const auto& neighbors = game.neighborhoods[i];
        const int m = game.action_count();

        // Expected payoff of each own action under the neighbors' joint
        // mixed strategies, brute-forced over the neighbor action profiles.
        std::uint64_t joint_count = 1;
        bool enumerable = true;
        for (std::size_t j = 0; j < neighbors.size() && enumerable; ++j) {
            joint_count *= static_cast<std::uint64_t>(m);
            if (joint_count > kEnumerationBudget) enumerable = false;
        }
        pr.enumerated = enumerable;

        std::vector<double> expected(m, 0.0);
        std::vector<int> joint(game.player_count, 0);
        if (enumerable) {
            std::vector<int> profile(neighbors.size(), 0);
            bool done = neighbors.empty();
            // Single pass when there are no neighbors.
            do {
                double weight = 1.0;
                for (std::size_t j = 0; j < neighbors.size(); ++j)
                    weight *= marginals.q[neighbors[j]][profile[j]];
                if (weight > 0.0 || neighbors.empty()) {
                    for (std::size_t j = 0; j < neighbors.size(); ++j)
                        joint[neighbors[j]] = profile[j];
                    for (int x = 0; x < m; ++x) {
                        joint[i] = x;
                        expected[x] += weight * payoff(i, joint, game);
                    }
                }
                // Advance the mixed-radix profile counter.
                done = true;
                for (std::size_t j = 0; j < profile.size(); ++j) {
                    if (++profile[j] < m) {
                        done = false;
                        break;
                    }
                    profile[j] = 0;
                }
            } while (!done);
        } else {
            Rng rng(derive_seed(0x5eedu, static_cast<std::uint64_t>(i), 0xECu));
            for (int s = 0; s < kSampleCount; ++s) {
                for (int j : neighbors) {
                    double u = rng.uniform();
                    int pick = 0;
                    double acc = 0.0;
                    for (int xj = 0; xj < m; ++xj) {
                        acc += marginals.q[j][xj];
                        if (u < acc) {
                            pick = xj;
                            break;
                        }
                        pick = xj;
                    }
                    joint[j] = pick;
                }
                for (int x = 0; x < m; ++x) {
                    joint[i] = x;
                    expected[x] += payoff(i, joint, game);
                }
            }
            for (double& v : expected) v /= kSampleCount;
        }

        // (a) fixed-point identity between log-marginal ratios and expected
        // payoff differences; (b) equilibrium ordering.
        pr.max_identity_error = 0.0;
        pr.ordering_violations = 0;
        for (int x = 0; x < m; ++x) {
            for (int y = 0; y < m; ++y) {
                if (x == y) continue;
                const double log_ratio =
                    std::log(marginals.q[i][x]) - std::log(marginals.q[i][y]);
                const double diff = expected[x] - expected[y];
                pr.max_identity_error =
                    std::max(pr.max_identity_error, std::abs(log_ratio - diff));
                if (marginals.q[i][x] >= marginals.q[i][y] && diff < -epsilon)
                    ++pr.ordering_violations;
            }
        }
        pr.passed = pr.max_identity_error <= epsilon && pr.ordering_violations == 0;
        all = all && pr.passed;
    }
    report.all_passed = all;
    return report;
}

}  // namespace coco
