#pragma once

#include <cmath>
#include <stdexcept>

namespace sslpass {

constexpr double kPi = 3.14159265358979323846;

/// 2D point/vector in field coordinates, meters.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }

    /// Unit vector; the zero vector maps to (0, 0).
    Vec2 unit() const {
        const double n = norm();
        return n > 0.0 ? Vec2{x / n, y / n} : Vec2{};
    }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }
inline Vec2 from_polar(double angle, double length) {
    return {length * std::cos(angle), length * std::sin(angle)};
}

/// Angle between two vectors in [0, pi]. Zero vectors give 0.
inline double angle_between(const Vec2& a, const Vec2& b) {
    return std::atan2(std::fabs(cross(a, b)), dot(a, b));
}

/// Distance from point p to segment [a, b].
inline double distance_to_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = ab.norm2();
    if (len2 == 0.0) return distance(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, a + ab * t);
}

/// Playing field: x in [0, length], y in [0, width]. We attack the goal on
/// the x = length side. Goal mouth and penalty area are centered on the
/// goal line.
struct FieldGeometry {
    double length = 12.0;
    double width = 9.0;
    double goal_width = 1.8;
    double penalty_width = 3.6;  // along the goal line
    double penalty_depth = 1.8;  // into the field

    bool contains(const Vec2& p) const {
        return p.x >= 0.0 && p.x <= length && p.y >= 0.0 && p.y <= width;
    }

    double diagonal() const { return std::hypot(length, width); }

    Vec2 their_goal_center() const { return {length, width / 2.0}; }
    Vec2 our_goal_center() const { return {0.0, width / 2.0}; }
    Vec2 their_goal_post_low() const { return {length, (width - goal_width) / 2.0}; }
    Vec2 their_goal_post_high() const { return {length, (width + goal_width) / 2.0}; }

    /// Opponent penalty area, the box in front of the attacked goal.
    bool in_their_penalty_area(const Vec2& p) const {
        return p.x >= length - penalty_depth && p.x <= length &&
               p.y >= (width - penalty_width) / 2.0 &&
               p.y <= (width + penalty_width) / 2.0;
    }

    void validate() const {
        if (!(length > 0.0 && width > 0.0))
            throw std::invalid_argument("FieldGeometry: field dimensions must be positive");
        if (!(goal_width > 0.0 && goal_width <= width))
            throw std::invalid_argument("FieldGeometry: bad goal width");
        if (!(penalty_width > 0.0 && penalty_width <= width && penalty_depth > 0.0 &&
              penalty_depth <= length))
            throw std::invalid_argument("FieldGeometry: bad penalty area");
    }
};

}  // namespace sslpass
