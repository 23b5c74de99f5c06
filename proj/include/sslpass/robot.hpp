#pragma once

#include <stdexcept>

#include "sslpass/geometry.hpp"

namespace sslpass {

enum class Team { Ours, Theirs };

/// Kinematic envelope of one robot. Rotational limits are carried for
/// completeness; the planar point-mass planner does not use them.
struct RobotLimits {
    double v_max = 3.0;       // m/s
    double a_max = 4.5;       // m/s^2
    double omega_max = 15.0;  // rad/s
    double alpha_max = 15.0;  // rad/s^2

    void validate() const {
        if (!(v_max > 0.0 && a_max > 0.0 && omega_max > 0.0 && alpha_max > 0.0))
            throw std::invalid_argument("RobotLimits: all limits must be strictly positive");
    }
};

struct RobotState {
    int id = 0;
    Team team = Team::Ours;
    Vec2 position;
    Vec2 velocity;

    void validate(const RobotLimits& limits) const {
        constexpr double kSlack = 1e-6;
        if (!position.finite() || !velocity.finite())
            throw std::invalid_argument("RobotState: non-finite state");
        if (velocity.norm() > limits.v_max + kSlack)
            throw std::invalid_argument("RobotState: velocity exceeds v_max");
    }
};

}  // namespace sslpass
