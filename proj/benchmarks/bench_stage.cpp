// Microbenchmarks for the two dominant per-stage costs: building the stage
// game (coverage precomputation) and the mean-field solve, swept over the
// neighbor count and the ROI size.

#include <benchmark/benchmark.h>

#include <vector>

#include "coco/game.hpp"
#include "coco/mfvi.hpp"
#include "coco/netsim.hpp"
#include "coco/rng.hpp"
#include "coco/roi.hpp"

namespace {

using namespace coco;

ChannelParams no_fading() {
    ChannelParams params;
    params.fading_var_dbm2 = 0.0;
    return params;
}

RoiGrid square_grid(int cells_per_axis) {
    RoiGrid grid;
    grid.mean = {0, 0};
    const double half = cells_per_axis * 5.0;
    grid.cov = {half * half, 0.0, half * half};
    double total = 0.0;
    for (int iy = 0; iy < cells_per_axis; ++iy) {
        for (int ix = 0; ix < cells_per_axis; ++ix) {
            const Vec2 center{(ix - (cells_per_axis - 1) / 2.0) * 10.0,
                              (iy - (cells_per_axis - 1) / 2.0) * 10.0};
            const double w = std::exp(-0.5 * grid.cov.inverse().quad(center));
            grid.cells.push_back({center, w});
            total += w;
        }
    }
    for (auto& cell : grid.cells) cell.probability /= total;
    return grid;
}

/// Robots on a ring, all mutually linked: neighbor_count + 1 players with
/// complete neighborhoods of the requested size.
std::vector<RobotState> ring_states(int player_count) {
    std::vector<RobotState> states;
    for (int i = 0; i < player_count; ++i) {
        const double angle = 6.283185307179586 * i / player_count;
        states.push_back({{30.0 * std::cos(angle), 30.0 * std::sin(angle)}, {0, 0}});
    }
    return states;
}

std::vector<std::vector<int>> complete_neighborhoods(int player_count) {
    std::vector<std::vector<int>> neighborhoods(player_count);
    for (int i = 0; i < player_count; ++i)
        for (int j = 0; j < player_count; ++j)
            if (i != j) neighborhoods[i].push_back(j);
    return neighborhoods;
}

void BM_BuildStageGame(benchmark::State& state) {
    const int neighbors = static_cast<int>(state.range(0));
    const int cells_per_axis = static_cast<int>(state.range(1));
    const auto states = ring_states(neighbors + 1);
    const auto neighborhoods = complete_neighborhoods(neighbors + 1);
    const RoiGrid grid = square_grid(cells_per_axis);
    const ActionSet actions = build_action_set(3.0, 5);
    for (auto _ : state) {
        StageGame game = build_stage_game_from_neighborhoods(states, neighborhoods, grid,
                                                             no_fading(), {}, actions, 1.0);
        benchmark::DoNotOptimize(game.coverage);
    }
}
BENCHMARK(BM_BuildStageGame)
    ->ArgsProduct({{1, 2, 4, 7}, {10, 20, 30}})
    ->Unit(benchmark::kMillisecond);

void BM_OptimizeStage(benchmark::State& state) {
    const int neighbors = static_cast<int>(state.range(0));
    const auto states = ring_states(neighbors + 1);
    const auto neighborhoods = complete_neighborhoods(neighbors + 1);
    const RoiGrid grid = square_grid(20);
    const ActionSet actions = build_action_set(3.0, 5);
    const StageGame game = build_stage_game_from_neighborhoods(states, neighborhoods, grid,
                                                               no_fading(), {}, actions, 1.0);
    for (auto _ : state) {
        auto solved = optimize_stage(game);
        benchmark::DoNotOptimize(solved.second.sweeps);
    }
}
BENCHMARK(BM_OptimizeStage)->Arg(1)->Arg(2)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_RoutingTables(benchmark::State& state) {
    const int nodes = static_cast<int>(state.range(0));
    Rng placement(99);
    std::vector<Vec2> positions(nodes);
    for (Vec2& p : positions)
        p = {placement.uniform(0.0, 200.0), placement.uniform(0.0, 200.0)};
    Rng fading(7);
    const LinkGraph graph = build_link_graph(positions, ChannelParams{}, fading);
    for (auto _ : state) {
        RoutingTables tables = compute_routing_tables(graph);
        benchmark::DoNotOptimize(tables.hops);
    }
}
BENCHMARK(BM_RoutingTables)->Arg(5)->Arg(10)->Arg(25)->Arg(50);

void BM_BuildGrid(benchmark::State& state) {
    const double spread = static_cast<double>(state.range(0));
    const Mat2 cov{spread * spread, 0.0, spread * spread};
    for (auto _ : state) {
        RoiGrid grid = build_grid({0, 0}, cov, 10.0, 3.0);
        benchmark::DoNotOptimize(grid.cells);
    }
}
BENCHMARK(BM_BuildGrid)->Arg(15)->Arg(50)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
