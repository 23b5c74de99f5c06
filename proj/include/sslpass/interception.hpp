#pragma once

#include <cmath>
#include <cstddef>
#include <optional>

#include "sslpass/ball.hpp"
#include "sslpass/grid.hpp"
#include "sslpass/kinematics.hpp"
#include "sslpass/parallel.hpp"
#include "sslpass/robot.hpp"

namespace sslpass {

/// Earliest point/time at which a robot can meet the predicted ball, if any.
struct InterceptSolution {
    int robot_id = -1;
    bool feasible = false;
    Vec2 point;          // P_best, valid only if feasible
    double time = 0.0;   // T_best = k*dt, valid only if feasible
};

struct InterceptParams {
    double dt = 1.0 / 60.0;
    double horizon = 10.0;

    void validate() const {
        if (!(dt > 0.0) || !(horizon > 0.0))
            throw std::invalid_argument("InterceptParams: dt and horizon must be positive");
    }
};

/// Time-sampled interception search: scan k = 0,1,2,... and accept the first
/// sample where the ball is on the ground, inside the field, and the robot's
/// arrival time to that point does not exceed k*dt. Out-of-field samples are
/// skipped rather than clamped, so a ball that exits the field can be
/// unreachable even inside the horizon.
inline InterceptSolution intercept(const RobotState& robot, const RobotLimits& limits,
                                   const BallTrajectory& traj, const FieldGeometry& field,
                                   const InterceptParams& params = {}) {
    params.validate();
    InterceptSolution sol;
    sol.robot_id = robot.id;
    const auto steps = static_cast<std::size_t>(std::floor(params.horizon / params.dt));
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * params.dt;
        if (!traj.interceptable_at(t)) continue;
        const Vec2 p = traj.position_at(t);
        if (!field.contains(p)) continue;
        if (time_to_point(robot, p, limits) <= t) {
            sol.feasible = true;
            sol.point = p;
            sol.time = t;
            return sol;
        }
    }
    return sol;
}

struct GridSpec {
    std::size_t nx = 60;
    std::size_t ny = 45;

    void validate() const {
        if (nx < 4 || ny < 4) throw std::invalid_argument("GridSpec: resolution below 4x4");
    }
};

/// Interception-time heat map: one intercept() per cell with a robot starting
/// at rest at the cell center. Cells are independent, so the result does not
/// depend on the worker count.
inline ScalarGrid intercept_heatmap(const BallState& ball, const RobotLimits& limits,
                                    const BallPhysicsParams& physics,
                                    const FieldGeometry& field, const GridSpec& spec,
                                    const InterceptParams& params = {}, int workers = 0) {
    spec.validate();
    const double cell = field.length / static_cast<double>(spec.nx);
    ScalarGrid grid(spec.nx, spec.ny, cell, {0.0, 0.0});
    const BallTrajectory traj = predict_flat(ball, physics);
    parallel_for(spec.nx * spec.ny, workers, [&](std::size_t i) {
        const std::size_t ix = i % spec.nx;
        const std::size_t iy = i / spec.nx;
        RobotState probe{0, Team::Ours, grid.cell_center(ix, iy), {0.0, 0.0}};
        const InterceptSolution sol = intercept(probe, limits, traj, field, params);
        grid.at(ix, iy) = sol.feasible ? sol.time : kInfeasible;
    });
    return grid;
}

}  // namespace sslpass
