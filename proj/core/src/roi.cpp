#include "coco/roi.hpp"

#include <cmath>
#include <stdexcept>

namespace coco {

void UeTeam::validate() const {
    if (positions.size() != goals.size())
        throw std::invalid_argument("ue team: positions and goals must have the same length");
    if (!(speed >= 0.0)) throw std::invalid_argument("ue team: speed must be >= 0");
}

std::pair<Vec2, Mat2> ellipsoid_from_ues(const std::vector<Vec2>& positions, double epsilon_m2) {
    if (positions.empty()) throw std::invalid_argument("ellipsoid_from_ues: need at least one UE");
    const double n = static_cast<double>(positions.size());

    Vec2 mean;
    for (const Vec2& p : positions) mean += p;
    mean = mean / n;

    Mat2 cov{epsilon_m2, 0.0, epsilon_m2};
    for (const Vec2& p : positions) {
        const Vec2 d = p - mean;
        cov.xx += d.x * d.x / n;
        cov.xy += d.x * d.y / n;
        cov.yy += d.y * d.y / n;
    }
    return {mean, cov};
}

RoiGrid build_grid(const Vec2& mean, const Mat2& cov, double cell_size_m, double mahalanobis_cut) {
    if (!cov.positive_definite())
        throw std::invalid_argument("build_grid: covariance must be positive definite");
    if (!(cell_size_m > 0.0)) throw std::invalid_argument("build_grid: cell size must be > 0");
    if (!(mahalanobis_cut > 0.0))
        throw std::invalid_argument("build_grid: mahalanobis cut must be > 0");

    RoiGrid grid;
    grid.mean = mean;
    grid.cov = cov;
    grid.cell_size_m = cell_size_m;
    grid.mahalanobis_cut = mahalanobis_cut;

    // Axis-aligned bounding half-extents of the cut ellipse.
    const int kx = static_cast<int>(std::ceil(mahalanobis_cut * std::sqrt(cov.xx) / cell_size_m));
    const int ky = static_cast<int>(std::ceil(mahalanobis_cut * std::sqrt(cov.yy) / cell_size_m));

    const Mat2 precision = cov.inverse();
    double total = 0.0;
    for (int iy = -ky; iy <= ky; ++iy) {
        for (int ix = -kx; ix <= kx; ++ix) {
            const Vec2 center{mean.x + ix * cell_size_m, mean.y + iy * cell_size_m};
            const double m2 = precision.quad(center - mean);
            if (m2 > mahalanobis_cut * mahalanobis_cut) continue;
            const double weight = std::exp(-0.5 * m2);
            grid.cells.push_back({center, weight});
            total += weight;
        }
    }
    if (grid.cells.empty()) {
        grid.cells.push_back({mean, 1.0});
        total = 1.0;
    }
    for (auto& cell : grid.cells) cell.probability /= total;
    return grid;
}

UeTeam advance_ues(const UeTeam& team, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("advance_ues: dt must be > 0");
    team.validate();
    UeTeam next = team;
    for (std::size_t i = 0; i < next.positions.size(); ++i) {
        const Vec2 to_goal = next.goals[i] - next.positions[i];
        const double remaining = to_goal.norm();
        if (remaining == 0.0) continue;
        const double travel = std::min(team.speed * dt, remaining);
        next.positions[i] += to_goal * (travel / remaining);
    }
    return next;
}

}  // namespace coco
