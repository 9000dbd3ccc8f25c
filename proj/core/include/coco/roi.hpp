#pragma once

#include <utility>
#include <vector>

#include "coco/geometry.hpp"

namespace coco {

/// The terrestrial client team. Each UE travels in a straight line toward its
/// goal; positions and goals are index-aligned.
struct UeTeam {
    std::vector<Vec2> positions;  ///< m
    std::vector<Vec2> goals;      ///< m
    double speed = 1.0;           ///< m/s, >= 0

    void validate() const;
};

/// Discretized concentration-ellipsoid region of interest. Cell weights are
/// the bivariate Gaussian density at the cell center, normalized over the
/// included cells.
struct RoiGrid {
    struct Cell {
        Vec2 center;
        double probability = 0.0;
    };

    Vec2 mean;
    Mat2 cov;               ///< symmetric positive-definite, m^2
    double cell_size_m = 10.0;
    double mahalanobis_cut = 3.0;
    std::vector<Cell> cells;  ///< row-major by center (ascending y, then x)
};

/// Mean and population covariance (divide by count) of the UE positions,
/// regularized by epsilon * I to stay positive definite for degenerate teams.
std::pair<Vec2, Mat2> ellipsoid_from_ues(const std::vector<Vec2>& positions,
                                         double epsilon_m2 = 1.0);

/// Lays a cell_size grid centered on the mean over the Mahalanobis-cut
/// ellipse. Always includes at least the cell containing the mean.
RoiGrid build_grid(const Vec2& mean, const Mat2& cov, double cell_size_m, double mahalanobis_cut);

/// Moves each UE straight toward its goal at min(speed, remaining/dt);
/// stops exactly at the goal, never overshoots.
UeTeam advance_ues(const UeTeam& team, double dt);

}  // namespace coco
