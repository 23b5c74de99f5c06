#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sslpass/ball.hpp"
#include "sslpass/features.hpp"
#include "sslpass/geometry.hpp"
#include "sslpass/interception.hpp"
#include "sslpass/robot.hpp"

namespace sslpass {

/// One kick the leader can execute: mode c, direction theta, speed v.
struct KickAction {
    KickMode mode = KickMode::Flat;
    double direction = 0.0;  // radians, [0, 2pi)
    double speed = 0.0;      // m/s, (0, kMaxKickSpeed]

    void validate() const {
        if (!(speed > 0.0 && speed <= kMaxKickSpeed))
            throw std::invalid_argument("KickAction: speed outside (0, 6.5]");
        if (!(direction >= 0.0 && direction < 2.0 * kPi))
            throw std::invalid_argument("KickAction: direction outside [0, 2pi)");
    }
};

/// Discretization of the kick-action space: evenly bisected directions and
/// speeds, crossed with the kick modes.
struct ActionGrid {
    std::size_t n_directions = 128;
    std::size_t n_speeds = 16;
    std::vector<KickMode> modes{KickMode::Flat, KickMode::Chip};
    double max_speed = kMaxKickSpeed;

    std::size_t size() const { return n_directions * n_speeds * modes.size(); }

    void validate() const {
        if (n_directions < 1 || n_speeds < 1 || modes.empty())
            throw std::invalid_argument("ActionGrid: counts must be at least 1");
        if (!(max_speed > 0.0 && max_speed <= kMaxKickSpeed))
            throw std::invalid_argument("ActionGrid: bad max_speed");
    }
};

/// Actions in canonical order: mode-major, then direction, then speed.
/// Directions are 2*pi*j/n; speeds are max_speed*(j+1)/n (zero excluded).
inline std::vector<KickAction> enumerate_actions(const ActionGrid& grid) {
    grid.validate();
    std::vector<KickAction> actions;
    actions.reserve(grid.size());
    for (KickMode mode : grid.modes) {
        for (std::size_t j = 0; j < grid.n_directions; ++j) {
            const double theta =
                2.0 * kPi * static_cast<double>(j) / static_cast<double>(grid.n_directions);
            for (std::size_t s = 0; s < grid.n_speeds; ++s) {
                const double v = grid.max_speed * static_cast<double>(s + 1) /
                                 static_cast<double>(grid.n_speeds);
                actions.push_back({mode, theta, v});
            }
        }
    }
    return actions;
}

/// Ball trajectory produced by executing `action` on a ball at `from`.
inline BallTrajectory action_trajectory(const Vec2& from, const KickAction& action,
                                        const BallPhysicsParams& physics) {
    if (action.mode == KickMode::Flat)
        return predict_flat({from, from_polar(action.direction, action.speed)}, physics);
    return predict_chip({from, {0.0, 0.0}}, action.speed, action.direction, physics);
}

/// Immutable per-frame scene: ball, every robot, and who holds the ball.
struct WorldSnapshot {
    BallState ball;
    std::vector<RobotState> robots;
    int leader_id = 0;
    FieldGeometry field;
    RobotLimits our_limits;
    RobotLimits their_limits;

    static constexpr std::size_t kMaxRobots = 24;

    const RobotLimits& limits_for(Team team) const {
        return team == Team::Ours ? our_limits : their_limits;
    }

    const RobotState* find(int id) const {
        for (const auto& r : robots)
            if (r.id == id) return &r;
        return nullptr;
    }

    const RobotState& leader() const {
        const RobotState* l = find(leader_id);
        if (!l) throw std::logic_error("WorldSnapshot: leader not found");
        return *l;
    }

    void validate() const {
        field.validate();
        our_limits.validate();
        their_limits.validate();
        if (robots.size() > kMaxRobots)
            throw std::invalid_argument("WorldSnapshot: more than 24 robots");
        for (std::size_t i = 0; i < robots.size(); ++i) {
            robots[i].validate(limits_for(robots[i].team));
            for (std::size_t j = i + 1; j < robots.size(); ++j)
                if (robots[i].id == robots[j].id)
                    throw std::invalid_argument("WorldSnapshot: duplicate robot id");
        }
        const RobotState* l = find(leader_id);
        if (!l) throw std::invalid_argument("WorldSnapshot: leader id not present");
        if (l->team != Team::Ours)
            throw std::invalid_argument("WorldSnapshot: leader must be on our team");
    }
};

/// A kick action paired with the teammate who receives it, the predicted
/// reception, and its normalized features.
struct Cacop {
    std::size_t action_index = 0;  // position in enumerate_actions order
    KickAction action;
    int receiver_id = -1;
    InterceptSolution receiver_solution;
    double opponent_margin = 0.0;  // +inf when no opponent can intercept at all
    FeatureVector features;
};

// --- line-delimited record serialization (the Fig.-4-style data path) ------

inline nlohmann::json cacop_to_json(const Cacop& c) {
    nlohmann::json j;
    j["mode"] = c.action.mode == KickMode::Flat ? "flat" : "chip";
    j["theta"] = c.action.direction;
    j["v"] = c.action.speed;
    j["receiver"] = c.receiver_id;
    j["p_best"] = {c.receiver_solution.point.x, c.receiver_solution.point.y};
    j["t_best"] = c.receiver_solution.time;
    if (std::isinf(c.opponent_margin))
        j["margin"] = "inf";
    else
        j["margin"] = c.opponent_margin;
    j["features"] = c.features.to_array();
    return j;
}

inline void write_cacops(std::ostream& out, const std::vector<Cacop>& set) {
    for (const Cacop& c : set) out << cacop_to_json(c).dump() << '\n';
}

inline Cacop cacop_from_json(const nlohmann::json& j) {
    Cacop c;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode != "flat" && mode != "chip")
        throw std::runtime_error("cacop record: unknown mode " + mode);
    c.action.mode = mode == "flat" ? KickMode::Flat : KickMode::Chip;
    c.action.direction = j.at("theta").get<double>();
    c.action.speed = j.at("v").get<double>();
    c.receiver_id = j.at("receiver").get<int>();
    c.receiver_solution.robot_id = c.receiver_id;
    c.receiver_solution.feasible = true;
    c.receiver_solution.point = {j.at("p_best").at(0).get<double>(),
                                 j.at("p_best").at(1).get<double>()};
    c.receiver_solution.time = j.at("t_best").get<double>();
    const auto& margin = j.at("margin");
    c.opponent_margin = margin.is_string() ? kInfeasible : margin.get<double>();
    std::array<double, FeatureVector::kDim> feats{};
    for (std::size_t i = 0; i < feats.size(); ++i) feats[i] = j.at("features").at(i).get<double>();
    c.features = FeatureVector::from_array(feats);
    return c;
}

inline std::vector<Cacop> read_cacops(std::istream& in) {
    std::vector<Cacop> set;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        set.push_back(cacop_from_json(nlohmann::json::parse(line)));
    }
    return set;
}

}  // namespace sslpass
