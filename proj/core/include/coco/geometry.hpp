#pragma once

#include <cmath>
#include <stdexcept>

namespace coco {

/// Planar vector in meters (or m/s, m/s^2 depending on context).
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    constexpr bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    double norm() const { return std::hypot(x, y); }
    constexpr double norm_sq() const { return x * x + y * y; }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

inline bool is_finite(const Vec2& v) { return std::isfinite(v.x) && std::isfinite(v.y); }

/// Symmetric 2x2 matrix, used for ROI covariances (m^2).
struct Mat2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    constexpr double det() const { return xx * yy - xy * xy; }

    constexpr bool positive_definite() const { return xx > 0.0 && det() > 0.0; }

    /// Inverse of a positive-definite matrix.
    Mat2 inverse() const {
        const double d = det();
        if (d <= 0.0) throw std::invalid_argument("Mat2::inverse: matrix not positive definite");
        return {yy / d, -xy / d, xx / d};
    }

    /// Quadratic form v^T M v.
    constexpr double quad(const Vec2& v) const {
        return xx * v.x * v.x + 2.0 * xy * v.x * v.y + yy * v.y * v.y;
    }
};

/// Mahalanobis distance of p from mean under a positive-definite covariance.
inline double mahalanobis(const Vec2& p, const Vec2& mean, const Mat2& cov) {
    return std::sqrt(cov.inverse().quad(p - mean));
}

}  // namespace coco
