#pragma once

#include <vector>

#include "coco/geometry.hpp"

namespace coco {

/// Planar double-integrator state at a fixed altitude.
struct RobotState {
    Vec2 position;  ///< m
    Vec2 velocity;  ///< m/s
};

/// Shared discretized acceleration set: a levels_per_axis^2 Cartesian grid of
/// uniformly spaced values in [-a_max, a_max] per axis, row-major ascending.
struct ActionSet {
    std::vector<Vec2> actions;  ///< m/s^2
    double a_max = 3.0;
    int levels_per_axis = 5;

    int size() const { return static_cast<int>(actions.size()); }
};

/// Builds the action grid. levels_per_axis == 1 degenerates to hover-only.
/// Throws std::invalid_argument for a_max <= 0 or levels_per_axis < 1.
ActionSet build_action_set(double a_max, int levels_per_axis);

/// Exact zero-order-hold step of the double integrator:
///   p' = p + v*dt + a*dt^2/2,  v' = v + a*dt then norm-clamped to v_max.
RobotState step(const RobotState& state, const Vec2& action, double dt, double v_max);

/// Position reached after one step; the velocity clamp cannot affect it.
Vec2 predict_position(const RobotState& state, const Vec2& action, double dt);

}  // namespace coco
