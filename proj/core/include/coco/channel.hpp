#pragma once

#include "coco/geometry.hpp"
#include "coco/rng.hpp"

namespace coco {

/// Log-distance path-loss channel parameters. All powers in dBm, the fading
/// variance in dBm^2, distances in meters.
///
/// Defaults model an 802.11a radio in open space: reference loss taken from
/// the Friis model at the 1 m reference distance.
struct ChannelParams {
    double t0_dbm = 16.02;          ///< transmit power
    double l0_dbm = 46.67;          ///< free-space loss at the 1 m reference
    double path_loss_exp = 3.0;     ///< dimensionless exponent
    double fading_var_dbm2 = 32.0;  ///< variance of the zero-mean Gaussian fading
    double link_threshold_dbm = -90.0;  ///< receiver sensitivity
    double d_min_m = 1.0;               ///< minimum effective distance

    void validate() const;
};

/// Expected RSS between two positions: t0 - (l0 + 10*n*log10(max(d, d_min))).
/// Deterministic and symmetric in its position arguments.
/// Throws std::invalid_argument on non-finite positions.
double expected_rss(const Vec2& pos_a, const Vec2& pos_b, const ChannelParams& params);

/// Same path loss evaluated directly on a distance.
double expected_rss_at(double distance_m, const ChannelParams& params);

/// Sampled RSS: expected RSS minus one zero-mean Gaussian fading draw.
/// Consumes exactly one Gaussian draw from rng.
double sample_rss(const Vec2& pos_a, const Vec2& pos_b, const ChannelParams& params, Rng& rng);

/// A link is up iff the sampled RSS reaches the receiver sensitivity.
inline bool link_up(double rss_dbm, const ChannelParams& params) {
    return rss_dbm >= params.link_threshold_dbm;
}

}  // namespace coco
