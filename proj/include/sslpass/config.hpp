#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sslpass/cacop.hpp"
#include "sslpass/rl.hpp"
#include "sslpass/search.hpp"
#include "sslpass/sim.hpp"

namespace sslpass {

/// `key = value` file with '#' comments. Keys are dotted paths; values keep
/// their raw text and are coerced on access.
class KeyValueFile {
  public:
    static KeyValueFile parse(std::istream& in, const std::string& origin = "<stream>") {
        KeyValueFile kv;
        kv.origin_ = origin;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                if (line.find_first_not_of(" \t\r") != std::string::npos)
                    throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                             ": expected 'key = value'");
                continue;
            }
            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            if (key.empty())
                throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": empty key");
            kv.values_[key] = value;
        }
        return kv;
    }

    static KeyValueFile parse_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open file: " + path);
        return parse(in, path);
    }

    bool has(const std::string& key) const { return values_.count(key) > 0; }

    const std::map<std::string, std::string>& entries() const { return values_; }

    double get_double(const std::string& key, double fallback) const {
        const auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        return to_double(key, it->second);
    }

    std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const {
        const auto it = values_.find(key);
        if (it == values_.end()) return fallback;
        try {
            return std::stoull(it->second);
        } catch (const std::exception&) {
            throw std::runtime_error(origin_ + ": key '" + key + "': bad integer '" +
                                     it->second + "'");
        }
    }

    std::string get_string(const std::string& key, const std::string& fallback) const {
        const auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    std::vector<double> get_doubles(const std::string& key) const {
        std::vector<double> out;
        const auto it = values_.find(key);
        if (it == values_.end()) return out;
        std::istringstream ss(it->second);
        std::string tok;
        while (ss >> tok) out.push_back(to_double(key, tok));
        return out;
    }

    const std::string& origin() const { return origin_; }

  private:
    static std::string trim(const std::string& s) {
        const auto a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return "";
        const auto b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    }

    double to_double(const std::string& key, const std::string& text) const {
        try {
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return v;
        } catch (const std::exception&) {
            throw std::runtime_error(origin_ + ": key '" + key + "': bad number '" + text + "'");
        }
    }

    std::map<std::string, std::string> values_;
    std::string origin_;
};

/// Everything configurable in one place. Loaded from a key-value file over
/// built-in defaults; unknown keys are rejected.
struct Config {
    FieldGeometry field;
    RobotLimits our_limits;
    RobotLimits their_limits;
    BallPhysicsParams physics;
    ActionGrid action_grid;
    SearchParams search;
    std::array<double, FeatureVector::kDim> linear_weights{-0.3, 0.2, -0.2, -0.1, 0.4};
    RewardParams reward_params;
    TrainParams train;
    SimConfig sim;
    std::uint64_t seed = 1;
    int workers = 0;

    void validate() const {
        field.validate();
        our_limits.validate();
        their_limits.validate();
        physics.validate();
        action_grid.validate();
        search.validate();
        reward_params.validate();
        train.validate();
        sim.validate();
    }

    static const std::vector<std::string>& known_keys() {
        static const std::vector<std::string> keys = {
            "seed", "workers",
            "field.length", "field.width", "field.goal_width", "field.penalty_width",
            "field.penalty_depth",
            "limits.ours.v_max", "limits.ours.a_max", "limits.ours.omega_max",
            "limits.ours.alpha_max",
            "limits.theirs.v_max", "limits.theirs.a_max", "limits.theirs.omega_max",
            "limits.theirs.alpha_max",
            "ball.roll_decel", "ball.bounce_restitution", "ball.chip_launch_angle",
            "ball.gravity",
            "search.n_directions", "search.n_speeds", "search.modes", "search.max_kick_speed",
            "search.dt", "search.horizon", "search.margin_min", "search.mode",
            "scoring.weights",
            "reward.a", "reward.penalty_area", "reward.goal",
            "train.alpha", "train.gamma", "train.capacity", "train.batch", "train.eps_start",
            "train.eps_end", "train.eps_decay", "train.offline_updates",
            "train.updates_per_episode",
            "sim.timestep", "sim.capture_radius", "sim.capture_rel_speed", "sim.pass_step_cap",
            "sim.episode_step_cap", "sim.episode_pass_cap", "sim.jitter", "sim.defense",
        };
        return keys;
    }

    void apply(const KeyValueFile& kv) {
        for (const auto& [key, value] : kv.entries()) {
            bool known = false;
            for (const std::string& k : known_keys())
                if (k == key) {
                    known = true;
                    break;
                }
            if (!known)
                throw std::runtime_error(kv.origin() + ": unknown configuration key '" + key +
                                         "' = '" + value + "'");
        }

        seed = kv.get_uint("seed", seed);
        workers = static_cast<int>(kv.get_uint("workers", static_cast<std::uint64_t>(workers)));

        field.length = kv.get_double("field.length", field.length);
        field.width = kv.get_double("field.width", field.width);
        field.goal_width = kv.get_double("field.goal_width", field.goal_width);
        field.penalty_width = kv.get_double("field.penalty_width", field.penalty_width);
        field.penalty_depth = kv.get_double("field.penalty_depth", field.penalty_depth);

        auto load_limits = [&](const std::string& prefix, RobotLimits& l) {
            l.v_max = kv.get_double(prefix + ".v_max", l.v_max);
            l.a_max = kv.get_double(prefix + ".a_max", l.a_max);
            l.omega_max = kv.get_double(prefix + ".omega_max", l.omega_max);
            l.alpha_max = kv.get_double(prefix + ".alpha_max", l.alpha_max);
        };
        load_limits("limits.ours", our_limits);
        load_limits("limits.theirs", their_limits);

        physics.roll_decel = kv.get_double("ball.roll_decel", physics.roll_decel);
        physics.bounce_restitution =
            kv.get_double("ball.bounce_restitution", physics.bounce_restitution);
        physics.chip_launch_angle =
            kv.get_double("ball.chip_launch_angle", physics.chip_launch_angle);
        physics.gravity = kv.get_double("ball.gravity", physics.gravity);

        action_grid.n_directions = kv.get_uint("search.n_directions", action_grid.n_directions);
        action_grid.n_speeds = kv.get_uint("search.n_speeds", action_grid.n_speeds);
        action_grid.max_speed = kv.get_double("search.max_kick_speed", action_grid.max_speed);
        const std::string modes = kv.get_string("search.modes", "");
        if (!modes.empty()) {
            if (modes == "flat")
                action_grid.modes = {KickMode::Flat};
            else if (modes == "chip")
                action_grid.modes = {KickMode::Chip};
            else if (modes == "flat,chip" || modes == "chip,flat")
                action_grid.modes = {KickMode::Flat, KickMode::Chip};
            else
                throw std::runtime_error(kv.origin() + ": search.modes must be flat, chip, or flat,chip");
        }
        search.intercept.dt = kv.get_double("search.dt", search.intercept.dt);
        search.intercept.horizon = kv.get_double("search.horizon", search.intercept.horizon);
        search.margin_min = kv.get_double("search.margin_min", search.margin_min);
        const std::string mode = kv.get_string("search.mode", "");
        if (!mode.empty()) {
            if (mode == "full")
                search.mode = SearchMode::Full;
            else if (mode == "pruned")
                search.mode = SearchMode::Pruned;
            else
                throw std::runtime_error(kv.origin() + ": search.mode must be full or pruned");
        }

        const std::vector<double> w = kv.get_doubles("scoring.weights");
        if (!w.empty()) {
            if (w.size() != FeatureVector::kDim)
                throw std::runtime_error(kv.origin() + ": scoring.weights needs 5 numbers");
            for (std::size_t i = 0; i < w.size(); ++i) linear_weights[i] = w[i];
        }

        reward_params.a = kv.get_double("reward.a", reward_params.a);
        reward_params.r_penalty_area =
            kv.get_double("reward.penalty_area", reward_params.r_penalty_area);
        reward_params.r_goal = kv.get_double("reward.goal", reward_params.r_goal);

        train.alpha = kv.get_double("train.alpha", train.alpha);
        train.gamma = kv.get_double("train.gamma", train.gamma);
        train.replay_capacity = kv.get_uint("train.capacity", train.replay_capacity);
        train.batch_size = kv.get_uint("train.batch", train.batch_size);
        train.epsilon.start = kv.get_double("train.eps_start", train.epsilon.start);
        train.epsilon.end = kv.get_double("train.eps_end", train.epsilon.end);
        train.epsilon.decay_episodes = kv.get_uint("train.eps_decay", train.epsilon.decay_episodes);
        train.offline_updates = kv.get_uint("train.offline_updates", train.offline_updates);
        train.updates_per_episode =
            kv.get_uint("train.updates_per_episode", train.updates_per_episode);

        sim.timestep = kv.get_double("sim.timestep", sim.timestep);
        sim.capture_radius = kv.get_double("sim.capture_radius", sim.capture_radius);
        sim.capture_rel_speed = kv.get_double("sim.capture_rel_speed", sim.capture_rel_speed);
        sim.pass_step_cap = kv.get_uint("sim.pass_step_cap", sim.pass_step_cap);
        sim.episode_step_cap = kv.get_uint("sim.episode_step_cap", sim.episode_step_cap);
        sim.episode_pass_cap = kv.get_uint("sim.episode_pass_cap", sim.episode_pass_cap);
        sim.placement_jitter = kv.get_double("sim.jitter", sim.placement_jitter);
        sim.defense_policy = kv.get_string("sim.defense", sim.defense_policy);

        finalize();
    }

    /// Re-syncs the derived fields after direct mutation (flag overrides).
    void finalize() {
        sim.field = field;
        train.seed = seed;
        sim.seed = seed;
        search.workers = workers;
        validate();
    }

    static Config load(const std::string& path) {
        Config c;
        c.apply(KeyValueFile::parse_file(path));
        return c;
    }
};

/// Scenario file: `ball = x y vx vy`, `leader = id`, and one
/// `robot.<id> = ours|theirs x y [vx vy]` per robot.
inline WorldSnapshot load_scenario(const KeyValueFile& kv, const Config& config) {
    WorldSnapshot w;
    w.field = config.field;
    w.our_limits = config.our_limits;
    w.their_limits = config.their_limits;

    for (const auto& [key, value] : kv.entries()) {
        if (key == "ball") {
            const auto nums = kv.get_doubles("ball");
            if (nums.size() != 4)
                throw std::runtime_error(kv.origin() + ": ball needs 'x y vx vy'");
            w.ball = {{nums[0], nums[1]}, {nums[2], nums[3]}};
        } else if (key == "leader") {
            w.leader_id = static_cast<int>(kv.get_uint("leader", 0));
        } else if (key.rfind("robot.", 0) == 0) {
            const std::string id_text = key.substr(6);
            int id = 0;
            try {
                id = std::stoi(id_text);
            } catch (const std::exception&) {
                throw std::runtime_error(kv.origin() + ": bad robot id in key '" + key + "'");
            }
            std::istringstream ss(value);
            std::string team;
            double x, y, vx = 0.0, vy = 0.0;
            if (!(ss >> team >> x >> y))
                throw std::runtime_error(kv.origin() + ": robot needs 'team x y [vx vy]'");
            ss >> vx >> vy;
            if (team != "ours" && team != "theirs")
                throw std::runtime_error(kv.origin() + ": robot team must be ours or theirs");
            w.robots.push_back(
                {id, team == "ours" ? Team::Ours : Team::Theirs, {x, y}, {vx, vy}});
        } else {
            throw std::runtime_error(kv.origin() + ": unknown scenario key '" + key + "'");
        }
    }
    w.validate();
    return w;
}

inline WorldSnapshot load_scenario_file(const std::string& path, const Config& config) {
    return load_scenario(KeyValueFile::parse_file(path), config);
}

/// Built-in 4v4 attack/defense scenario: four attackers in our half, four
/// man-marking defenders between them and the attacked goal.
inline WorldSnapshot default_scenario_4v4(const Config& config) {
    WorldSnapshot w;
    w.field = config.field;
    w.our_limits = config.our_limits;
    w.their_limits = config.their_limits;
    const double width = config.field.width;
    const double length = config.field.length;
    w.robots = {
        {0, Team::Ours, {length * (1.0 / 6.0), width / 2.0}, {0, 0}},
        {1, Team::Ours, {length / 3.0, width * 0.72}, {0, 0}},
        {2, Team::Ours, {length / 3.0, width * 0.28}, {0, 0}},
        {3, Team::Ours, {length / 2.0, width / 2.0}, {0, 0}},
        {10, Team::Theirs, {length * 0.54, width * 0.66}, {0, 0}},
        {11, Team::Theirs, {length * 0.54, width * 0.33}, {0, 0}},
        {12, Team::Theirs, {length * 0.71, width * 0.61}, {0, 0}},
        {13, Team::Theirs, {length * 0.71, width * 0.39}, {0, 0}},
    };
    w.leader_id = 0;
    w.ball = {w.robots[0].position, {0.0, 0.0}};
    return w;
}

}  // namespace sslpass
