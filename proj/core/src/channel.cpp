#include "coco/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace coco {

void ChannelParams::validate() const {
    if (!(path_loss_exp > 0.0)) throw std::invalid_argument("channel: path_loss_exp must be > 0");
    if (!(fading_var_dbm2 >= 0.0))
        throw std::invalid_argument("channel: fading_var_dbm2 must be >= 0");
    if (!(d_min_m > 0.0)) throw std::invalid_argument("channel: d_min_m must be > 0");
}

double expected_rss_at(double distance_m, const ChannelParams& params) {
    if (!std::isfinite(distance_m))
        throw std::invalid_argument("expected_rss: non-finite distance");
    const double d = std::max(distance_m, params.d_min_m);
    return params.t0_dbm - (params.l0_dbm + 10.0 * params.path_loss_exp * std::log10(d));
}

double expected_rss(const Vec2& pos_a, const Vec2& pos_b, const ChannelParams& params) {
    if (!is_finite(pos_a) || !is_finite(pos_b))
        throw std::invalid_argument("expected_rss: non-finite position");
    return expected_rss_at(distance(pos_a, pos_b), params);
}

double sample_rss(const Vec2& pos_a, const Vec2& pos_b, const ChannelParams& params, Rng& rng) {
    const double mean = expected_rss(pos_a, pos_b, params);
    const double fading = std::sqrt(params.fading_var_dbm2) * rng.gaussian();
    return mean - fading;
}

}  // namespace coco
