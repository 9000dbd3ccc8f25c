#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "coco/rng.hpp"
#include "coco/roi.hpp"

using namespace coco;

TEST_CASE("four corner UEs give the identity covariance plus the regularizer") {
    const auto [mean, cov] = ellipsoid_from_ues({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    CHECK(mean == Vec2{0, 0});
    CHECK(cov.xx == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(cov.yy == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(cov.xy == doctest::Approx(0.0));
}

TEST_CASE("a single UE degenerates to the regularizer alone") {
    const auto [mean, cov] = ellipsoid_from_ues({{5, 5}});
    CHECK(mean == Vec2{5, 5});
    CHECK(cov.xx == doctest::Approx(1.0));
    CHECK(cov.yy == doctest::Approx(1.0));
    CHECK(cov.xy == doctest::Approx(0.0));
}

TEST_CASE("two collinear UEs: population covariance along the axis") {
    const auto [mean, cov] = ellipsoid_from_ues({{0, 0}, {2, 0}});
    CHECK(mean == Vec2{1, 0});
    CHECK(cov.xx == doctest::Approx(2.0).epsilon(1e-12));  // 1 + regularizer
    CHECK(cov.yy == doctest::Approx(1.0).epsilon(1e-12));  // regularizer only
    CHECK(cov.xy == doctest::Approx(0.0));
}

TEST_CASE("the ellipsoid is translation-equivariant") {
    Rng rng(3);
    std::vector<Vec2> ues;
    for (int i = 0; i < 6; ++i) ues.push_back({rng.uniform(-40, 40), rng.uniform(-40, 40)});
    const auto [mean, cov] = ellipsoid_from_ues(ues);
    const Vec2 shift{13.5, -7.25};
    std::vector<Vec2> shifted = ues;
    for (Vec2& p : shifted) p += shift;
    const auto [mean2, cov2] = ellipsoid_from_ues(shifted);
    CHECK(mean2.x == doctest::Approx(mean.x + shift.x).epsilon(1e-12));
    CHECK(mean2.y == doctest::Approx(mean.y + shift.y).epsilon(1e-12));
    CHECK(cov2.xx == doctest::Approx(cov.xx).epsilon(1e-12));
    CHECK(cov2.xy == doctest::Approx(cov.xy).epsilon(1e-12));
    CHECK(cov2.yy == doctest::Approx(cov.yy).epsilon(1e-12));
}

TEST_CASE("a cut smaller than the cell size leaves exactly the mean cell") {
    const RoiGrid grid = build_grid({4, -2}, {1, 0, 1}, 10.0, 3.0);
    REQUIRE(grid.cells.size() == 1);
    CHECK(grid.cells[0].center == Vec2{4, -2});
    CHECK(grid.cells[0].probability == doctest::Approx(1.0));
}

TEST_CASE("cells mirrored about the mean carry equal probability") {
    const RoiGrid grid = build_grid({0, 0}, {400, 0, 400}, 10.0, 3.0);
    REQUIRE(grid.cells.size() > 1);
    for (const auto& cell : grid.cells) {
        const Vec2 mirrored{-cell.center.x, -cell.center.y};
        const auto match = std::find_if(grid.cells.begin(), grid.cells.end(),
                                        [&](const RoiGrid::Cell& c) { return c.center == mirrored; });
        REQUIRE(match != grid.cells.end());
        CHECK(match->probability == doctest::Approx(cell.probability).epsilon(1e-12));
    }
}

TEST_CASE("probability decreases strictly with distance from the mean") {
    const RoiGrid grid = build_grid({0, 0}, {100, 0, 100}, 10.0, 3.0);
    // Isotropic covariance: density ordering must follow radial distance.
    for (const auto& a : grid.cells) {
        for (const auto& b : grid.cells) {
            if (a.center.norm() < b.center.norm() - 1e-9)
                CHECK(a.probability > b.probability);
        }
    }
}

TEST_CASE("probabilities normalize for arbitrary UE configurations") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vec2> ues;
        const int count = 1 + static_cast<int>(rng.uniform_index(8));
        for (int i = 0; i < count; ++i)
            ues.push_back({rng.uniform(-150, 150), rng.uniform(-150, 150)});
        const auto [mean, cov] = ellipsoid_from_ues(ues);
        const RoiGrid grid = build_grid(mean, cov, 10.0, 3.0);
        double total = 0.0;
        for (const auto& cell : grid.cells) {
            total += cell.probability;
            CHECK(mahalanobis(cell.center, mean, cov) <= 3.0 + 1e-12);
        }
        CHECK(std::abs(total - 1.0) < 1e-9);
    }
}

TEST_CASE("grid construction validates its inputs") {
    CHECK_THROWS_AS(build_grid({0, 0}, {0, 0, 1}, 10.0, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid({0, 0}, {1, 0, 1}, 0.0, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid({0, 0}, {1, 0, 1}, 10.0, 0.0), std::invalid_argument);
}

TEST_CASE("UEs advance straight toward goals without overshoot") {
    UeTeam team;
    team.positions = {{0, 0}, {9.5, 0}, {4, 4}};
    team.goals = {{10, 0}, {10, 0}, {4, 4}};
    team.speed = 1.0;
    const UeTeam moved = advance_ues(team, 1.0);
    CHECK(moved.positions[0] == Vec2{1, 0});
    CHECK(moved.positions[1] == Vec2{10, 0});  // capped at the goal
    CHECK(moved.positions[2] == Vec2{4, 4});   // already there

    UeTeam frozen = team;
    frozen.speed = 0.0;
    const UeTeam still = advance_ues(frozen, 1.0);
    CHECK(still.positions[0] == team.positions[0]);
}

TEST_CASE("advancing never increases the distance to goal") {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        UeTeam team;
        team.positions = {{rng.uniform(-50, 50), rng.uniform(-50, 50)}};
        team.goals = {{rng.uniform(-50, 50), rng.uniform(-50, 50)}};
        team.speed = rng.uniform(0.0, 5.0);
        const double dt = rng.uniform(0.1, 3.0);
        UeTeam current = team;
        for (int s = 0; s < 10; ++s) {
            const UeTeam next = advance_ues(current, dt);
            CHECK(distance(next.positions[0], next.goals[0]) <=
                  distance(current.positions[0], current.goals[0]) + 1e-12);
            current = next;
        }
    }
}

TEST_CASE("mismatched team shapes are rejected") {
    UeTeam team;
    team.positions = {{0, 0}};
    team.goals = {};
    CHECK_THROWS_AS(team.validate(), std::invalid_argument);
}
