#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sslpass/geometry.hpp"

namespace sslpass {

/// Kick speed ceiling of the kicker hardware, m/s.
constexpr double kMaxKickSpeed = 6.5;

struct BallState {
    Vec2 position;
    Vec2 velocity;
};

struct BallPhysicsParams {
    double roll_decel = 0.5;           // field friction, m/s^2
    double bounce_restitution = 0.6;   // vertical speed kept per bounce
    double chip_launch_angle = kPi / 4.0;  // radians above ground
    double gravity = 9.81;             // m/s^2

    void validate() const {
        if (!(roll_decel > 0.0))
            throw std::invalid_argument("BallPhysicsParams: roll_decel must be positive");
        if (!(bounce_restitution >= 0.0 && bounce_restitution < 1.0))
            throw std::invalid_argument("BallPhysicsParams: restitution must be in [0,1)");
        if (!(chip_launch_angle > 0.0 && chip_launch_angle < kPi / 2.0))
            throw std::invalid_argument("BallPhysicsParams: launch angle must be in (0,pi/2)");
        if (!(gravity > 0.0))
            throw std::invalid_argument("BallPhysicsParams: gravity must be positive");
    }
};

enum class KickMode { Flat, Chip };

/// Predicted ball motion along a fixed ground direction. A flat kick rolls
/// and decelerates until it stops; a chip flies two ballistic hops (during
/// which it cannot be intercepted) and then rolls with the preserved
/// horizontal speed. Positions are the ground track; `ground_speed_at`
/// reports the along-track speed.
struct BallTrajectory {
    KickMode kind = KickMode::Flat;
    BallState origin;
    BallPhysicsParams params;

    Vec2 dir;                      // unit ground direction, zero if stationary
    double launch_speed = 0.0;     // |v| at the kick
    double roll_start_time = 0.0;  // 0 for flat, end of second hop for chip
    Vec2 roll_start_pos;
    double roll_speed = 0.0;       // ground speed when rolling begins
    double first_drop_time = 0.0;  // chip only
    Vec2 first_drop_pos;           // chip only

    double roll_duration() const { return roll_speed / params.roll_decel; }
    double stop_time() const { return roll_start_time + roll_duration(); }
    Vec2 stop_point() const {
        return roll_start_pos + dir * (roll_speed * roll_speed / (2.0 * params.roll_decel));
    }

    Vec2 position_at(double t) const {
        if (t <= roll_start_time) return origin.position + dir * (roll_speed * t);
        const double tau = std::min(t - roll_start_time, roll_duration());
        return roll_start_pos +
               dir * (roll_speed * tau - 0.5 * params.roll_decel * tau * tau);
    }

    double ground_speed_at(double t) const {
        if (t <= roll_start_time) return roll_speed;
        return std::max(0.0, roll_speed - params.roll_decel * (t - roll_start_time));
    }

    /// Field robots cannot intercept the ball while it is airborne.
    bool interceptable_at(double t) const { return t >= roll_start_time; }

    struct PhaseBoundary {
        double time;
        Vec2 position;
        double speed;
    };

    std::vector<PhaseBoundary> phase_boundaries() const {
        std::vector<PhaseBoundary> b;
        b.push_back({0.0, origin.position, roll_speed});
        if (kind == KickMode::Chip) {
            b.push_back({first_drop_time, first_drop_pos, roll_speed});
            b.push_back({roll_start_time, roll_start_pos, roll_speed});
        }
        b.push_back({stop_time(), stop_point(), 0.0});
        return b;
    }
};

/// Straight-line roll under constant field friction from the ball's current
/// velocity. speed(t) = max(0, |v0| - roll_decel*t).
inline BallTrajectory predict_flat(const BallState& origin, const BallPhysicsParams& params) {
    params.validate();
    BallTrajectory traj;
    traj.kind = KickMode::Flat;
    traj.origin = origin;
    traj.params = params;
    traj.dir = origin.velocity.unit();
    traj.launch_speed = origin.velocity.norm();
    traj.roll_start_time = 0.0;
    traj.roll_start_pos = origin.position;
    traj.roll_speed = traj.launch_speed;
    traj.first_drop_time = 0.0;
    traj.first_drop_pos = origin.position;
    return traj;
}

/// Lofted kick: two projectile hops at the configured launch angle. The
/// horizontal component is preserved through the bounces; the vertical
/// component is scaled by the restitution at each touchdown. After the
/// second drop the ball rolls like a flat kick.
inline BallTrajectory predict_chip(const BallState& origin, double kick_speed,
                                   double direction, const BallPhysicsParams& params) {
    params.validate();
    if (!(kick_speed > 0.0 && kick_speed <= kMaxKickSpeed))
        throw std::invalid_argument("predict_chip: kick_speed outside (0, 6.5]");

    const Vec2 dir = from_polar(direction, 1.0);
    const double horizontal = kick_speed * std::cos(params.chip_launch_angle);
    const double vertical = kick_speed * std::sin(params.chip_launch_angle);
    const double hop1 = 2.0 * vertical / params.gravity;
    const double hop2 = hop1 * params.bounce_restitution;

    BallTrajectory traj;
    traj.kind = KickMode::Chip;
    traj.origin = {origin.position, dir * kick_speed};
    traj.params = params;
    traj.dir = dir;
    traj.launch_speed = kick_speed;
    traj.first_drop_time = hop1;
    traj.first_drop_pos = origin.position + dir * (horizontal * hop1);
    traj.roll_start_time = hop1 + hop2;
    traj.roll_start_pos = origin.position + dir * (horizontal * (hop1 + hop2));
    traj.roll_speed = horizontal;
    return traj;
}

}  // namespace sslpass
