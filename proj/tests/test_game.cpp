#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "coco/game.hpp"
#include "coco/verify.hpp"
#include "test_util.hpp"

using namespace coco;

namespace {

ChannelParams no_fading() {
    ChannelParams params;
    params.fading_var_dbm2 = 0.0;
    return params;
}

ActionSet hover_only() {
    ActionSet set;
    set.actions = {{0.0, 0.0}};
    set.levels_per_axis = 1;
    return set;
}

RoiGrid single_cell(const Vec2& center) {
    RoiGrid grid;
    grid.mean = center;
    grid.cov = {1.0, 0.0, 1.0};
    grid.cells.push_back({center, 1.0});
    return grid;
}

RobotState resting(double x, double y) { return {{x, y}, {0.0, 0.0}}; }

}  // namespace

TEST_CASE("star topology gains exactly the auxiliary edge between leaves") {
    // Hub at the origin, leaves at +-60 m: leaf-leaf distance 120 m has no
    // direct link, so k = 1 neighborhoods are {1,2}, {0}, {0}.
    const std::vector<RobotState> states = {resting(0, 0), resting(60, 0), resting(-60, 0)};
    std::vector<Vec2> positions;
    for (const auto& s : states) positions.push_back(s.position);
    Rng rng(1);
    const RoutingTables routing =
        compute_routing_tables(build_link_graph(positions, no_fading(), rng));

    const StageGame game = build_stage_game(states, routing, 1, single_cell({0, 0}), no_fading(),
                                            {}, hover_only(), 1.0);
    CHECK(game.neighborhoods[0] == std::vector<int>({1, 2}));
    CHECK(game.neighborhoods[1] == std::vector<int>{0});
    CHECK(game.neighborhoods[2] == std::vector<int>{0});

    REQUIRE(game.edges.size() == 3);
    CHECK(game.edges[0].a == 0);
    CHECK(game.edges[0].b == 1);
    CHECK(game.edges[0].kind == EdgeKind::Original);
    CHECK(game.edges[1].a == 0);
    CHECK(game.edges[1].b == 2);
    CHECK(game.edges[1].kind == EdgeKind::Original);
    CHECK(game.edges[2].a == 1);
    CHECK(game.edges[2].b == 2);
    CHECK(game.edges[2].kind == EdgeKind::Auxiliary);
}

TEST_CASE("with k = 2 the leaf pair becomes an original edge") {
    const std::vector<RobotState> states = {resting(0, 0), resting(60, 0), resting(-60, 0)};
    std::vector<Vec2> positions;
    for (const auto& s : states) positions.push_back(s.position);
    Rng rng(1);
    const RoutingTables routing =
        compute_routing_tables(build_link_graph(positions, no_fading(), rng));
    const StageGame game = build_stage_game(states, routing, 2, single_cell({0, 0}), no_fading(),
                                            {}, hover_only(), 1.0);
    for (const GameEdge& e : game.edges) CHECK(e.kind == EdgeKind::Original);
    CHECK(game.edges.size() == 3);
}

TEST_CASE("a complete triangle needs no auxiliary edges") {
    const std::vector<RobotState> states = {resting(0, 0), resting(30, 0), resting(15, 20)};
    std::vector<Vec2> positions;
    for (const auto& s : states) positions.push_back(s.position);
    Rng rng(1);
    const RoutingTables routing =
        compute_routing_tables(build_link_graph(positions, no_fading(), rng));
    const StageGame game = build_stage_game(states, routing, 1, single_cell({0, 0}), no_fading(),
                                            {}, hover_only(), 1.0);
    CHECK(game.edges.size() == 3);
    for (const GameEdge& e : game.edges) CHECK(e.kind == EdgeKind::Original);
}

TEST_CASE("an isolated robot plays a single-player game") {
    const StageGame game = build_stage_game_from_neighborhoods(
        {resting(0, 0)}, {{}}, single_cell({10, 0}), no_fading(), {}, hover_only(), 1.0);
    CHECK(game.edges.empty());
    CHECK(game.fixed_field[0][0] == -std::numeric_limits<double>::infinity());
    const std::vector<int> joint{0};
    CHECK(payoff(0, joint, game) ==
          doctest::Approx(game.weights.alpha_a * coverage_psi_c(0, 0, game)));
}

TEST_CASE("coverage of a lone robot is the expected RSS at the cell") {
    const StageGame game = build_stage_game_from_neighborhoods(
        {resting(0, 0)}, {{}}, single_cell({10, 0}), no_fading(), {}, hover_only(), 1.0);
    CHECK(coverage_psi_c(0, 0, game) == doctest::Approx(-60.65).epsilon(1e-12));
}

TEST_CASE("a dominant neighbor field wins the coverage max") {
    // Neighbor sits 1 m from the cell: its -30.65 dBm beats own -60.65 dBm.
    const StageGame game = build_stage_game_from_neighborhoods(
        {resting(0, 0), resting(11, 0)}, {{1}, {0}}, single_cell({10, 0}), no_fading(), {},
        hover_only(), 1.0);
    CHECK(game.fixed_field[0][0] == doctest::Approx(-30.65).epsilon(1e-12));
    CHECK(coverage_psi_c(0, 0, game) == doctest::Approx(-30.65).epsilon(1e-12));
}

TEST_CASE("coverage weights cells by probability") {
    RoiGrid grid;
    grid.mean = {0, 0};
    grid.cov = {1.0, 0.0, 1.0};
    grid.cells = {{{1, 0}, 0.5}, {{10, 0}, 0.5}};
    const StageGame game = build_stage_game_from_neighborhoods({resting(0, 0)}, {{}}, grid,
                                                               no_fading(), {}, hover_only(), 1.0);
    CHECK(coverage_psi_c(0, 0, game) == doctest::Approx(-45.65).epsilon(1e-12));
}

TEST_CASE("coverage never decreases when the neighborhood grows") {
    RoiGrid grid;
    grid.mean = {0, 0};
    grid.cov = {400.0, 0.0, 400.0};
    grid.cells = {{{-20, 0}, 0.25}, {{0, 0}, 0.5}, {{20, 0}, 0.25}};
    const ActionSet actions = build_action_set(3.0, 3);
    const std::vector<RobotState> states = {resting(0, 0), resting(25, 0), resting(-25, 0)};

    const StageGame smaller = build_stage_game_from_neighborhoods(
        states, {{1}, {0}, {}}, grid, no_fading(), {}, actions, 1.0);
    const StageGame larger = build_stage_game_from_neighborhoods(
        states, {{1, 2}, {0}, {0}}, grid, no_fading(), {}, actions, 1.0);

    for (int r = 0; r < 3; ++r)
        CHECK(larger.fixed_field[0][r] >= smaller.fixed_field[0][r]);
    for (int x = 0; x < actions.size(); ++x)
        CHECK(coverage_psi_c(0, x, larger) >= coverage_psi_c(0, x, smaller));
}

TEST_CASE("pairwise RSS on predicted positions") {
    SUBCASE("both hovering at 10 m") {
        const StageGame game = build_stage_game_from_neighborhoods(
            {resting(0, 0), resting(10, 0)}, {{1}, {0}}, single_cell({0, 0}), no_fading(), {},
            hover_only(), 1.0);
        CHECK(pairwise_psi_r(0, 0, 1, 0, game) == doctest::Approx(-60.65).epsilon(1e-12));
        CHECK(pairwise_psi_r(0, 0, 1, 0, game) == pairwise_psi_r(1, 0, 0, 0, game));
    }
    SUBCASE("closing from 10 m to 5 m raises the value") {
        // Velocities carry the robots 2.5 m toward each other in one step.
        const std::vector<RobotState> states = {{{0, 0}, {2.5, 0}}, {{10, 0}, {-2.5, 0}}};
        const StageGame game = build_stage_game_from_neighborhoods(
            states, {{1}, {0}}, single_cell({0, 0}), no_fading(), {}, hover_only(), 1.0);
        CHECK(pairwise_psi_r(0, 0, 1, 0, game) ==
              doctest::Approx(-51.61910013008056).epsilon(1e-12));
        CHECK(pairwise_psi_r(0, 0, 1, 0, game) > -60.65);
    }
    SUBCASE("same player twice is rejected") {
        const StageGame game = build_stage_game_from_neighborhoods(
            {resting(0, 0), resting(10, 0)}, {{1}, {0}}, single_cell({0, 0}), no_fading(), {},
            hover_only(), 1.0);
        CHECK_THROWS_AS(pairwise_psi_r(0, 0, 0, 0, game), std::invalid_argument);
    }
}

TEST_CASE("payoff combines coverage and neighbor RSS with the two weights") {
    // Hub with two neighbors both 10 m away; single cell under the hub.
    const std::vector<RobotState> states = {resting(0, 0), resting(10, 0), resting(0, 10)};
    const StageGame game = build_stage_game_from_neighborhoods(
        states, {{1, 2}, {0, 2}, {0, 1}}, single_cell({0, 0}), no_fading(), {}, hover_only(),
        1.0);
    const std::vector<int> joint{0, 0, 0};
    const double psi_c = coverage_psi_c(0, 0, game);
    const double expected = 1.0 * psi_c + 0.001 * (-60.65 + -60.65);
    CHECK(payoff(0, joint, game) == doctest::Approx(expected).epsilon(1e-12));

    StageGame no_pair_term = game;
    no_pair_term.weights.alpha_b = 0.0;
    CHECK(payoff(0, joint, no_pair_term) == doctest::Approx(psi_c).epsilon(1e-12));
}

TEST_CASE("log potentials by clique type") {
    const std::vector<RobotState> states = {resting(0, 0), resting(60, 0), resting(-60, 0)};
    std::vector<Vec2> positions;
    for (const auto& s : states) positions.push_back(s.position);
    Rng rng(1);
    const RoutingTables routing =
        compute_routing_tables(build_link_graph(positions, no_fading(), rng));
    const StageGame game = build_stage_game(states, routing, 1, single_cell({0, 0}), no_fading(),
                                            {}, hover_only(), 1.0);
    const std::vector<int> joint{0, 0, 0};

    // Auxiliary leaf pair carries weight zero.
    CHECK(log_potential({Clique::Kind::Pair, 1, 2}, joint, game) == 0.0);
    // Unary neighborhood clique scales coverage by alpha_a = 1.
    CHECK(log_potential({Clique::Kind::Neighborhood, 0, -1}, joint, game) ==
          doctest::Approx(coverage_psi_c(0, 0, game)).epsilon(1e-12));
    // Original pair at 60 m: 0.001 * -83.9945...
    const double rss60 = 16.02 - (46.67 + 30.0 * std::log10(60.0));
    CHECK(log_potential({Clique::Kind::Pair, 0, 1}, joint, game) ==
          doctest::Approx(0.001 * rss60).epsilon(1e-12));

    CHECK_THROWS_AS(log_potential({Clique::Kind::Pair, 0, 0}, joint, game),
                    std::invalid_argument);
    CHECK_THROWS_AS(log_potential({Clique::Kind::Neighborhood, 7, -1}, joint, game),
                    std::invalid_argument);
}

TEST_CASE("pair potential at exactly 10 m freezes to -0.06065") {
    const StageGame game = build_stage_game_from_neighborhoods(
        {resting(0, 0), resting(10, 0)}, {{1}, {0}}, single_cell({0, 0}), no_fading(), {},
        hover_only(), 1.0);
    const std::vector<int> joint{0, 0};
    CHECK(log_potential({Clique::Kind::Pair, 0, 1}, joint, game) ==
          doctest::Approx(-0.06065).epsilon(1e-12));
}

TEST_CASE("single-robot density reduces to the weighted coverage") {
    const StageGame game = build_stage_game_from_neighborhoods(
        {resting(0, 0)}, {{}}, single_cell({10, 0}), no_fading(), {}, hover_only(), 1.0);
    const std::vector<int> joint{0};
    CHECK(joint_unnormalized_log_density(joint, game) ==
          doctest::Approx(game.weights.alpha_a * coverage_psi_c(0, 0, game)).epsilon(1e-12));
}

TEST_CASE("density equals the clique-potential sum on random instances") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const StageGame game = make_random_instance(seed);
        const auto cliques = game.cliques();
        const int m = game.action_count();
        std::vector<int> joint(game.player_count, 0);
        while (true) {
            double clique_sum = 0.0;
            for (const Clique& c : cliques) clique_sum += log_potential(c, joint, game);
            const double density = joint_unnormalized_log_density(joint, game);
            CHECK(std::abs(clique_sum - density) < 1e-12 * std::max(1.0, std::abs(density)));
            int pos = 0;
            for (; pos < game.player_count; ++pos) {
                if (++joint[pos] < m) break;
                joint[pos] = 0;
            }
            if (pos == game.player_count) break;
        }
    }
}

TEST_CASE("2x2 density table matches the brute-force clique product") {
    testing::SyntheticGameSpec spec;
    spec.actions = 2;
    spec.coverage = {{-50.0, -48.0}, {-55.0, -49.5}};
    spec.neighborhoods = {{1}, {0}};
    spec.pair_tables = {{{0, 1}, {-60.0, -62.0, -58.5, -61.0}}};
    spec.weights = {1.0, 0.001};
    const StageGame game = testing::make_synthetic_game(spec);

    for (int x0 = 0; x0 < 2; ++x0) {
        for (int x1 = 0; x1 < 2; ++x1) {
            const std::vector<int> joint{x0, x1};
            double product = 1.0;
            for (const Clique& c : game.cliques())
                product *= std::exp(log_potential(c, joint, game));
            const double density = std::exp(joint_unnormalized_log_density(joint, game));
            CHECK(product == doctest::Approx(density).epsilon(1e-12));
        }
    }
}

TEST_CASE("payoff decomposes into the potentials of the cliques joined at i") {
    for (std::uint64_t seed = 100; seed < 120; ++seed) {
        const StageGame game = make_random_instance(seed);
        const int m = game.action_count();
        std::vector<int> joint(game.player_count);
        Rng rng(seed);
        for (int& x : joint) x = static_cast<int>(rng.uniform_index(m));
        for (int i = 0; i < game.player_count; ++i) {
            double sum = log_potential({Clique::Kind::Neighborhood, i, -1}, joint, game);
            for (int j : game.neighborhoods[i])
                sum += log_potential({Clique::Kind::Pair, i, j}, joint, game);
            CHECK(payoff(i, joint, game) == doctest::Approx(sum).epsilon(1e-12));
        }
    }
}

TEST_CASE("stage game construction rejects mismatched routing tables") {
    RoutingTables routing;
    routing.node_count = 2;
    CHECK_THROWS_AS(build_stage_game({resting(0, 0)}, routing, 1, single_cell({0, 0}),
                                     no_fading(), {}, hover_only(), 1.0),
                    std::invalid_argument);
}
