#pragma once

#include <algorithm>
#include <cmath>

#include "sslpass/geometry.hpp"
#include "sslpass/robot.hpp"

namespace sslpass {

namespace detail {

/// Time to cover distance d >= 0 from rest, arriving at rest, under a
/// symmetric speed/acceleration budget. Triangular profile if the speed
/// cap is never reached, trapezoidal otherwise.
inline double rest_to_rest_time(double d, double v_limit, double a_limit) {
    const double v_peak = std::sqrt(a_limit * d);
    if (v_peak <= v_limit) return 2.0 * std::sqrt(d / a_limit);
    return d / v_limit + v_limit / a_limit;
}

}  // namespace detail

/// Minimum time for a 1-axis double integrator with |v| <= v_limit,
/// |a| <= a_limit to reach displacement d arriving at rest, starting at
/// velocity v0. Negative displacements are reflected. Overshooting starts
/// (stopping distance past the target, or motion away from it) brake to
/// rest first and then run the rest-start profile.
inline double time_to_point_1d(double d, double v0, double v_limit, double a_limit) {
    if (d < 0.0) {
        d = -d;
        v0 = -v0;
    }
    if (d == 0.0 && v0 == 0.0) return 0.0;

    if (v0 < 0.0) {
        // Moving away from the target: constant thrust toward it brakes to
        // rest and then covers the widened gap from a standing start.
        const double d_back = v0 * v0 / (2.0 * a_limit);
        return -v0 / a_limit + detail::rest_to_rest_time(d + d_back, v_limit, a_limit);
    }

    const double d_stop = v0 * v0 / (2.0 * a_limit);
    if (d_stop > d) {
        // Cannot stop in time: brake past the target, return from rest.
        return v0 / a_limit + detail::rest_to_rest_time(d_stop - d, v_limit, a_limit);
    }

    if (v0 > v_limit) {
        // Entering above the axis cap (the caller may split a 2D velocity
        // unevenly across axes): brake to the cap, cruise, decelerate.
        const double t_brake = (v0 - v_limit) / a_limit;
        const double d_brake = (v0 * v0 - v_limit * v_limit) / (2.0 * a_limit);
        const double d_dec = v_limit * v_limit / (2.0 * a_limit);
        return t_brake + (d - d_brake - d_dec) / v_limit + v_limit / a_limit;
    }

    const double v_peak = std::sqrt(a_limit * d + 0.5 * v0 * v0);
    if (v_peak <= v_limit) {
        // Triangular: accelerate to v_peak, decelerate to rest.
        return (2.0 * v_peak - v0) / a_limit;
    }
    // Trapezoidal: accelerate to the cap, cruise, decelerate.
    const double d_acc = (v_limit * v_limit - v0 * v0) / (2.0 * a_limit);
    const double d_dec = v_limit * v_limit / (2.0 * a_limit);
    return (v_limit - v0) / a_limit + (d - d_acc - d_dec) / v_limit + v_limit / a_limit;
}

/// Per-axis budget that keeps the combined speed/acceleration of the two
/// decoupled axes within the robot envelope.
inline double axis_budget(double limit) { return limit / std::sqrt(2.0); }

/// Upper bound on the minimum time for a robot to reach `target` arriving
/// at rest. Axes are decoupled with a 1/sqrt(2) budget split and the slower
/// axis dominates.
inline double time_to_point(const RobotState& start, const Vec2& target,
                            const RobotLimits& limits) {
    const double v_ax = axis_budget(limits.v_max);
    const double a_ax = axis_budget(limits.a_max);
    const double tx =
        time_to_point_1d(target.x - start.position.x, start.velocity.x, v_ax, a_ax);
    const double ty =
        time_to_point_1d(target.y - start.position.y, start.velocity.y, v_ax, a_ax);
    return std::max(tx, ty);
}

}  // namespace sslpass
