#include "coco/dynamics.hpp"

#include <stdexcept>

namespace coco {

ActionSet build_action_set(double a_max, int levels_per_axis) {
    if (!(a_max > 0.0)) throw std::invalid_argument("build_action_set: a_max must be > 0");
    if (levels_per_axis < 1)
        throw std::invalid_argument("build_action_set: levels_per_axis must be >= 1");

    ActionSet set;
    set.a_max = a_max;
    set.levels_per_axis = levels_per_axis;

    std::vector<double> levels(levels_per_axis);
    if (levels_per_axis == 1) {
        levels[0] = 0.0;  // hover only
    } else {
        const double spacing = 2.0 * a_max / (levels_per_axis - 1);
        for (int i = 0; i < levels_per_axis; ++i) levels[i] = -a_max + spacing * i;
    }

    set.actions.reserve(static_cast<std::size_t>(levels_per_axis) * levels_per_axis);
    for (double ax : levels)
        for (double ay : levels) set.actions.push_back({ax, ay});
    return set;
}

RobotState step(const RobotState& state, const Vec2& action, double dt, double v_max) {
    if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be > 0");
    RobotState next;
    next.position = state.position + state.velocity * dt + action * (0.5 * dt * dt);
    next.velocity = state.velocity + action * dt;
    const double speed = next.velocity.norm();
    if (v_max > 0.0 && speed > v_max) next.velocity = next.velocity * (v_max / speed);
    return next;
}

Vec2 predict_position(const RobotState& state, const Vec2& action, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("predict_position: dt must be > 0");
    return state.position + state.velocity * dt + action * (0.5 * dt * dt);
}

}  // namespace coco
