#pragma once

#include <string>

#include "coco/config.hpp"
#include "coco/engine.hpp"

namespace coco {

inline constexpr const char* kVersion = "0.1.0";

/// Fixed columns: step, time_s, mean_ue_rss_dbm, min_ue_rss_dbm,
/// mean_payoff, connected, solver_sweeps, stage_ms. '.' decimal point,
/// no locale dependence. stage_ms is measured wall clock and is the only
/// column excluded from reproducibility guarantees.
void write_metrics_csv(const std::string& path, const SimTrace& trace);

/// Per-step robot and UE positions as arrays of [x, y] meters.
void write_trajectories_json(const std::string& path, const SimTrace& trace);

/// Run manifest: tool version, seed, and the resolved config map. Loading
/// the manifest as a config reproduces the run exactly.
void write_manifest_json(const std::string& path, const ScenarioConfig& config);

/// One row per (group, step) with mean and standard-error columns.
void write_sweep_csv(const std::string& path, const SweepResult& result);

}  // namespace coco
