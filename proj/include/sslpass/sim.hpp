#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sslpass/ball.hpp"
#include "sslpass/cacop.hpp"
#include "sslpass/kinematics.hpp"
#include "sslpass/rl.hpp"
#include "sslpass/scoring.hpp"
#include "sslpass/search.hpp"

namespace sslpass {

struct SimConfig {
    FieldGeometry field;
    double timestep = 1.0 / 60.0;
    double capture_radius = 0.09 + 0.02;  // robot radius + ball contact slack
    double capture_rel_speed = 0.5;       // reception requires matched speed
    std::size_t pass_step_cap = 900;      // sim steps allotted to one pass
    std::size_t episode_step_cap = 3600;
    std::size_t episode_pass_cap = 32;    // collaboration steps per episode
    double placement_jitter = 0.8;        // scenario jitter radius, meters
    std::string defense_policy = "mark";  // mark | hold
    std::uint64_t seed = 1;

    void validate() const {
        field.validate();
        if (!(timestep > 0.0)) throw std::invalid_argument("SimConfig: timestep must be positive");
        if (!(capture_radius > 0.0 && capture_rel_speed > 0.0))
            throw std::invalid_argument("SimConfig: capture thresholds must be positive");
        if (episode_pass_cap == 0)
            throw std::invalid_argument("SimConfig: episode_pass_cap must be at least 1");
        if (defense_policy != "mark" && defense_policy != "hold")
            throw std::invalid_argument("SimConfig: unknown defense policy " + defense_policy);
    }
};

namespace detail {

struct AxisState {
    double x = 0.0;
    double v = 0.0;
};

/// Advances one axis of a point-drive by dt toward `target`, arriving at
/// rest. Same bang-bang law as the planner's closed forms: thrust toward the
/// target, decelerate on the stopping curve, cruise at the cap. Switching
/// instants inside the step are located analytically, so the robot parks on
/// the target without chatter.
inline AxisState advance_axis(AxisState s, double target, double v_limit, double a_limit,
                              double dt) {
    const double eps = 1e-12;
    const double snap = 1e-9;
    double remaining = dt;
    for (int guard = 0; guard < 4096 && remaining > eps; ++guard) {
        const double rem = target - s.x;
        if (std::fabs(rem) <= snap && std::fabs(s.v) <= snap) {
            s.x = target;
            s.v = 0.0;
            break;
        }
        const double dir = std::fabs(rem) > eps ? (rem > 0.0 ? 1.0 : -1.0)
                                                : (s.v > 0.0 ? -1.0 : 1.0);
        const double vs = s.v * dir;
        const double gap = std::fabs(rem);

        double a;
        if (vs < -eps) {
            a = dir * a_limit;
        } else if (s.v * s.v / (2.0 * a_limit) >= gap - eps) {
            a = -dir * a_limit;
        } else if (vs > v_limit + eps) {
            a = -dir * a_limit;
        } else if (vs >= v_limit - eps) {
            a = 0.0;
        } else {
            a = dir * a_limit;
        }

        double h = remaining;
        auto consider = [&](double t_ev) {
            if (t_ev > eps && t_ev < h) h = t_ev;
        };
        if (a != 0.0) {
            consider(-s.v / a);
            consider((dir * v_limit - s.v) / a);
            consider((-dir * v_limit - s.v) / a);
        }
        if (a == dir * a_limit && vs >= 0.0) {
            const double disc = 2.0 * vs * vs + 4.0 * a_limit * gap;
            consider((-2.0 * vs + std::sqrt(disc)) / (2.0 * a_limit));
        }
        if (a == 0.0) {
            consider((gap - v_limit * v_limit / (2.0 * a_limit)) / v_limit);
        }

        s.x += s.v * h + 0.5 * a * h * h;
        s.v += a * h;
        remaining -= h;
    }
    return s;
}

}  // namespace detail

enum class SimEvent { None, Goal, PenaltyArea, Captured, BallOut };

struct StepResult {
    SimEvent event = SimEvent::None;
    int captured_by = -1;
};

struct RobotCommand {
    int robot_id = -1;
    Vec2 target;
};

struct StepCommands {
    std::vector<RobotCommand> moves;
    std::optional<KickAction> kick;  // executed by the current holder
};

/// Desk-scale 2D simulator. Robots are point drives under the same bang-bang
/// law the planner assumes; a free ball follows its predicted trajectory
/// exactly. The ball is captured when a robot is within the capture radius
/// of a ground ball at matched relative speed. Deterministic: identical
/// inputs give identical traces.
class Simulator {
  public:
    Simulator(SimConfig config, WorldSnapshot initial)
        : config_(std::move(config)), world_(std::move(initial)) {
        config_.validate();
        world_.validate();
        holder_ = world_.leader_id;
        world_.ball.position = world_.leader().position;
        world_.ball.velocity = {0.0, 0.0};
    }

    const WorldSnapshot& world() const { return world_; }
    double time() const { return time_; }
    int holder() const { return holder_; }
    bool ball_free() const { return holder_ < 0; }
    const SimConfig& config() const { return config_; }

    /// Ball trajectory of the pass in flight, if any.
    const std::optional<BallTrajectory>& flight() const { return flight_; }

    void set_trace(std::ostream* sink) { trace_ = sink; }

    StepResult step(const StepCommands& commands) {
        StepResult result;

        // kick resolves at the start of the step
        if (commands.kick && holder_ >= 0) {
            flight_ = action_trajectory(world_.ball.position, *commands.kick,
                                        physics_for_kick(*commands.kick));
            kick_time_ = time_;
            holder_ = -1;
        }

        advance_robots(commands);
        const Vec2 ball_before = world_.ball.position;
        advance_ball();
        time_ += config_.timestep;

        result = detect_events(ball_before);
        if (trace_) write_trace(*trace_, result);
        return result;
    }

    /// Re-points the world's leader at the current holder.
    void crown_holder() {
        if (holder_ >= 0) world_.leader_id = holder_;
    }

    BallPhysicsParams physics = {};

  private:
    BallPhysicsParams physics_for_kick(const KickAction&) const { return physics; }

    void advance_robots(const StepCommands& commands) {
        std::map<int, Vec2> targets;
        for (const RobotCommand& c : commands.moves) targets[c.robot_id] = c.target;
        for (RobotState& r : world_.robots) {
            const RobotLimits& lim = world_.limits_for(r.team);
            const double v_ax = axis_budget(lim.v_max);
            const double a_ax = axis_budget(lim.a_max);
            Vec2 target;
            if (auto it = targets.find(r.id); it != targets.end()) {
                target = it->second;
            } else {
                // no command: brake to rest along each axis
                target = {r.position.x + r.velocity.x * std::fabs(r.velocity.x) / (2.0 * a_ax),
                          r.position.y + r.velocity.y * std::fabs(r.velocity.y) / (2.0 * a_ax)};
            }
            const auto nx = detail::advance_axis({r.position.x, r.velocity.x}, target.x, v_ax,
                                                 a_ax, config_.timestep);
            const auto ny = detail::advance_axis({r.position.y, r.velocity.y}, target.y, v_ax,
                                                 a_ax, config_.timestep);
            r.position = {nx.x, ny.x};
            r.velocity = {nx.v, ny.v};
        }
    }

    void advance_ball() {
        if (holder_ >= 0) {
            world_.ball.position = world_.find(holder_)->position;
            world_.ball.velocity = {0.0, 0.0};
            return;
        }
        if (!flight_) return;
        const double tau = time_ + config_.timestep - kick_time_;
        world_.ball.position = flight_->position_at(tau);
        world_.ball.velocity = flight_->dir * flight_->ground_speed_at(tau);
    }

    bool ball_on_ground() const {
        return !flight_ || flight_->interceptable_at(time_ - kick_time_);
    }

    StepResult detect_events(const Vec2& ball_before) {
        StepResult result;
        if (holder_ >= 0) return result;

        const Vec2 ball = world_.ball.position;
        const bool grounded = ball_on_ground();

        // goal: the ground ball crosses the goal line inside the mouth
        if (grounded && ball_before.x < config_.field.length && ball.x >= config_.field.length) {
            const double frac = (config_.field.length - ball_before.x) / (ball.x - ball_before.x);
            const double y_cross = ball_before.y + frac * (ball.y - ball_before.y);
            if (std::fabs(y_cross - config_.field.width / 2.0) <= config_.field.goal_width / 2.0) {
                result.event = SimEvent::Goal;
                return result;
            }
        }
        if (grounded && config_.field.in_their_penalty_area(ball)) {
            result.event = SimEvent::PenaltyArea;
            return result;
        }
        if (grounded) {
            // reception: nearest robot within the capture radius at matched speed
            const RobotState* catcher = nullptr;
            double best = config_.capture_radius;
            for (const RobotState& r : world_.robots) {
                const double d = distance(r.position, ball);
                const double rel = (r.velocity - world_.ball.velocity).norm();
                if (d <= best && rel < config_.capture_rel_speed) {
                    if (!catcher || d < best || r.id < catcher->id) {
                        catcher = &r;
                        best = d;
                    }
                }
            }
            if (catcher) {
                holder_ = catcher->id;
                flight_.reset();
                world_.ball.position = catcher->position;
                world_.ball.velocity = {0.0, 0.0};
                result.event = SimEvent::Captured;
                result.captured_by = holder_;
                return result;
            }
        }
        if (!config_.field.contains(ball)) {
            result.event = SimEvent::BallOut;
            return result;
        }
        return result;
    }

    void write_trace(std::ostream& out, const StepResult& result) const {
        nlohmann::json j;
        j["t"] = time_;
        j["ball"] = {world_.ball.position.x, world_.ball.position.y, world_.ball.velocity.x,
                     world_.ball.velocity.y};
        j["holder"] = holder_;
        auto& robots = j["robots"] = nlohmann::json::array();
        for (const RobotState& r : world_.robots) {
            nlohmann::json rj;
            rj["id"] = r.id;
            rj["team"] = r.team == Team::Ours ? "ours" : "theirs";
            rj["p"] = {r.position.x, r.position.y};
            rj["v"] = {r.velocity.x, r.velocity.y};
            robots.push_back(rj);
        }
        switch (result.event) {
            case SimEvent::None: j["event"] = "none"; break;
            case SimEvent::Goal: j["event"] = "goal"; break;
            case SimEvent::PenaltyArea: j["event"] = "penalty_area"; break;
            case SimEvent::Captured: j["event"] = "captured"; break;
            case SimEvent::BallOut: j["event"] = "ball_out"; break;
        }
        out << j.dump() << '\n';
    }

    SimConfig config_;
    WorldSnapshot world_;
    int holder_ = -1;
    std::optional<BallTrajectory> flight_;
    double kick_time_ = 0.0;
    double time_ = 0.0;
    std::ostream* trace_ = nullptr;
};

/// Where a receiving robot parks for a pass: the earliest trajectory sample
/// it can reach in time at which the ball has slowed enough for the capture
/// gate, shifted slightly downstream so the slowing ball rolls onto the
/// robot instead of stalling at the rim of the capture radius. P_best stays
/// the planning quantity.
inline std::optional<Vec2> receive_point(const RobotState& receiver, const RobotLimits& limits,
                                         const BallTrajectory& traj, const FieldGeometry& field,
                                         const InterceptParams& params, double max_ball_speed,
                                         double capture_radius) {
    const auto steps = static_cast<std::size_t>(std::floor(params.horizon / params.dt));
    const Vec2 offset = traj.dir * (0.9 * capture_radius);
    for (std::size_t k = 0; k <= steps; ++k) {
        const double t = static_cast<double>(k) * params.dt;
        if (!traj.interceptable_at(t)) continue;
        if (traj.ground_speed_at(t) > max_ball_speed) continue;
        const Vec2 park = traj.position_at(t) + offset;
        if (!field.contains(park)) continue;
        if (time_to_point(receiver, park, limits) <= t) return park;
    }
    return std::nullopt;
}

/// Scripted man-marking defense: each defender pairs with the nearest
/// unmarked attacker (defenders in id order, distance ties to the lower id)
/// and holds a point half a meter goal-side of its mark.
inline std::vector<RobotCommand> mark_defense_commands(const WorldSnapshot& world) {
    std::vector<const RobotState*> defenders, attackers;
    for (const RobotState& r : world.robots)
        (r.team == Team::Theirs ? defenders : attackers).push_back(&r);
    std::sort(defenders.begin(), defenders.end(),
              [](const RobotState* a, const RobotState* b) { return a->id < b->id; });

    std::vector<RobotCommand> cmds;
    std::vector<bool> marked(attackers.size(), false);
    for (const RobotState* d : defenders) {
        int pick = -1;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < attackers.size(); ++i) {
            if (marked[i]) continue;
            const double dist = distance(d->position, attackers[i]->position);
            if (dist < best || (dist == best && pick >= 0 &&
                                attackers[i]->id < attackers[static_cast<std::size_t>(pick)]->id)) {
                best = dist;
                pick = static_cast<int>(i);
            }
        }
        if (pick < 0) break;
        marked[static_cast<std::size_t>(pick)] = true;
        const Vec2 mark = attackers[static_cast<std::size_t>(pick)]->position;
        const Vec2 toward_goal = (world.field.their_goal_center() - mark).unit();
        cmds.push_back({d->id, mark + toward_goal * 0.5});
    }
    return cmds;
}

enum class TerminalEvent {
    Goal,
    PenaltyArea,
    Intercepted,
    BallOut,
    PassTimeout,
    NoFeasible,
    StepCap,
    PassBudget
};

inline const char* terminal_name(TerminalEvent e) {
    switch (e) {
        case TerminalEvent::Goal: return "goal";
        case TerminalEvent::PenaltyArea: return "penalty_area";
        case TerminalEvent::Intercepted: return "intercepted";
        case TerminalEvent::BallOut: return "ball_out";
        case TerminalEvent::PassTimeout: return "pass_timeout";
        case TerminalEvent::NoFeasible: return "no_feasible";
        case TerminalEvent::StepCap: return "step_cap";
        case TerminalEvent::PassBudget: return "pass_budget";
    }
    return "?";
}

struct EpisodeResult {
    std::size_t steps = 0;
    TerminalEvent terminal = TerminalEvent::NoFeasible;
    double cumulative_reward = 0.0;
    std::size_t passes_attempted = 0;
    std::size_t passes_received = 0;
    std::size_t passes_scored = 0;  // ended by goal or penalty-area entry
    std::vector<double> step_rewards;         // one entry per collaboration step
    std::vector<Transition> transitions;      // training view of the episode
};

/// One full pass-chain episode: build the feasible set, pick a candidate
/// (epsilon-greedy), kick, drive the receiver to its catch point while the
/// defense runs its script, then crown the catcher and repeat. Terminal on
/// goal, penalty-area entry, interception, ball out, or the step caps.
template <typename Scorer>
EpisodeResult run_pass_episode(Simulator& sim, Scorer& scorer, const RewardParams& rparams,
                               const ActionGrid& grid, const SearchParams& search,
                               double epsilon, std::mt19937_64& rng) {
    EpisodeResult result;
    const SimConfig& cfg = sim.config();
    const double catchable_speed = 0.9 * cfg.capture_rel_speed;
    std::optional<Transition> pending;

    auto finish = [&](TerminalEvent ev) {
        result.terminal = ev;
        if (pending) {
            result.transitions.push_back(*pending);
            pending.reset();
        }
    };

    while (true) {
        if (result.steps >= cfg.episode_step_cap) {
            if (pending) pending->terminal = true;
            finish(TerminalEvent::StepCap);
            return result;
        }

        sim.crown_holder();
        const WorldSnapshot& world = sim.world();

        // candidates: margin-feasible passes the receiver can actually catch
        std::vector<Cacop> candidates = build_feasible_set(world, grid, sim.physics, search);
        std::erase_if(candidates, [&](const Cacop& c) {
            const BallTrajectory traj =
                action_trajectory(world.ball.position, c.action, sim.physics);
            return !receive_point(*world.find(c.receiver_id), world.our_limits, traj,
                                  world.field, search.intercept, catchable_speed,
                                  cfg.capture_radius)
                        .has_value();
        });

        if (pending) {
            for (const Cacop& c : candidates) pending->next_candidates.push_back(c.features);
            result.transitions.push_back(*pending);
            pending.reset();
        }
        if (candidates.empty()) {
            finish(TerminalEvent::NoFeasible);
            return result;
        }

        std::optional<Cacop> chosen;
        if (epsilon > 0.0 &&
            std::uniform_real_distribution<double>(0.0, 1.0)(rng) < epsilon) {
            std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
            chosen = candidates[pick(rng)];
        } else {
            chosen = select_best(scorer, candidates);
        }

        // execute the pass
        ++result.passes_attempted;
        const BallTrajectory traj =
            action_trajectory(world.ball.position, chosen->action, sim.physics);
        const Vec2 park = receive_point(*world.find(chosen->receiver_id), world.our_limits, traj,
                                        world.field, search.intercept, catchable_speed,
                                        cfg.capture_radius)
                              .value_or(chosen->receiver_solution.point);

        StepCommands commands;
        commands.kick = chosen->action;
        Vec2 last_in_field = world.ball.position;
        SimEvent got = SimEvent::None;
        int catcher = -1;
        std::size_t pass_steps = 0;
        while (true) {
            commands.moves.clear();
            commands.moves.push_back({chosen->receiver_id, park});
            if (cfg.defense_policy == "mark")
                for (const RobotCommand& c : mark_defense_commands(sim.world()))
                    commands.moves.push_back(c);
            const StepResult sr = sim.step(commands);
            commands.kick.reset();
            ++result.steps;
            ++pass_steps;
            if (sim.world().field.contains(sim.world().ball.position))
                last_in_field = sim.world().ball.position;
            if (sr.event != SimEvent::None) {
                got = sr.event;
                catcher = sr.captured_by;
                break;
            }
            if (pass_steps >= cfg.pass_step_cap || result.steps >= cfg.episode_step_cap) break;
        }

        // settle the collaboration step
        GoalEvent gev = GoalEvent::None;
        bool terminal = false;
        TerminalEvent tev = TerminalEvent::PassTimeout;
        switch (got) {
            case SimEvent::Goal:
                gev = GoalEvent::Goal;
                terminal = true;
                tev = TerminalEvent::Goal;
                ++result.passes_scored;
                break;
            case SimEvent::PenaltyArea:
                gev = GoalEvent::PenaltyArea;
                terminal = true;
                tev = TerminalEvent::PenaltyArea;
                ++result.passes_scored;
                break;
            case SimEvent::Captured: {
                const RobotState* r = sim.world().find(catcher);
                if (r->team == Team::Ours) {
                    ++result.passes_received;
                } else {
                    terminal = true;
                    tev = TerminalEvent::Intercepted;
                }
                break;
            }
            case SimEvent::BallOut:
                terminal = true;
                tev = TerminalEvent::BallOut;
                break;
            case SimEvent::None:
                terminal = true;  // pass or episode step cap hit
                tev = result.steps >= cfg.episode_step_cap ? TerminalEvent::StepCap
                                                           : TerminalEvent::PassTimeout;
                break;
        }

        const double r = reward(last_in_field, gev, rparams, sim.world().field);
        result.step_rewards.push_back(r);
        result.cumulative_reward += r;

        // episode pass budget: both policies get the same number of
        // collaboration steps, so episode rewards are comparable
        if (!terminal && result.passes_attempted >= cfg.episode_pass_cap) {
            terminal = true;
            tev = TerminalEvent::PassBudget;
        }

        Transition tr;
        tr.state_features = chosen->features;
        tr.reward = r;
        tr.terminal = terminal;
        if (terminal) {
            result.transitions.push_back(tr);
            result.terminal = tev;
            return result;
        }
        pending = tr;
    }
}

struct EvalReport {
    std::size_t episodes = 0;
    double possession_retention = 0.0;
    double mean_reward = 0.0;
    double mean_passes = 0.0;
    /// received / (attempted - ended by scoring); scoring passes are a
    /// different kind of success, not a missed reception
    double capture_rate = 0.0;
    std::vector<double> episode_rewards;

    void write(std::ostream& out) const {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "episodes %zu\npossession_retention %.4f\nmean_reward %.6f\n"
                      "mean_passes %.4f\ncapture_rate %.4f\n",
                      episodes, possession_retention, mean_reward, mean_passes, capture_rate);
        out << buf;
    }
};

/// Uniform placement jitter applied to a scenario, clamped to the field with
/// a small margin. The ball stays glued to the leader.
inline WorldSnapshot jitter_world(const WorldSnapshot& base, double radius,
                                  std::mt19937_64& rng) {
    WorldSnapshot w = base;
    std::uniform_real_distribution<double> u(-radius, radius);
    const double margin = 0.2;
    for (RobotState& r : w.robots) {
        r.position.x =
            std::clamp(r.position.x + u(rng), margin, w.field.length - margin);
        r.position.y = std::clamp(r.position.y + u(rng), margin, w.field.width - margin);
    }
    w.ball.position = w.find(w.leader_id)->position;
    return w;
}

/// Batch evaluation: n jittered episodes from one scenario. Attack runs the
/// planner with the given scorer; defense runs the configured script.
template <typename Scorer>
EvalReport run_4v4(const SimConfig& config, const WorldSnapshot& scenario, Scorer& scorer,
                   const RewardParams& rparams, const ActionGrid& grid,
                   const SearchParams& search, std::size_t n_episodes, double epsilon = 0.0) {
    EvalReport report;
    if (n_episodes == 0) return report;

    std::size_t retained = 0, attempted = 0, received = 0, scored = 0;
    double reward_sum = 0.0;
    for (std::size_t ep = 0; ep < n_episodes; ++ep) {
        std::mt19937_64 rng(config.seed + 0x9e3779b97f4a7c15ULL * (ep + 1));
        WorldSnapshot start = jitter_world(scenario, config.placement_jitter, rng);
        Simulator sim(config, start);
        const EpisodeResult r = run_pass_episode(sim, scorer, rparams, grid, search, epsilon, rng);
        reward_sum += r.cumulative_reward;
        report.episode_rewards.push_back(r.cumulative_reward);
        attempted += r.passes_attempted;
        received += r.passes_received;
        scored += r.passes_scored;
        const bool lost = r.terminal == TerminalEvent::Intercepted ||
                          r.terminal == TerminalEvent::BallOut ||
                          r.terminal == TerminalEvent::PassTimeout;
        if (!lost) ++retained;
    }
    report.episodes = n_episodes;
    report.possession_retention = static_cast<double>(retained) / static_cast<double>(n_episodes);
    report.mean_reward = reward_sum / static_cast<double>(n_episodes);
    report.mean_passes = static_cast<double>(attempted) / static_cast<double>(n_episodes);
    const std::size_t receivable = attempted - scored;
    report.capture_rate =
        receivable > 0 ? static_cast<double>(received) / static_cast<double>(receivable) : 1.0;
    return report;
}

/// Pass-score heat map: each cell is scored as a synthetic candidate whose
/// P_best is the cell center, received by the fastest teammate. Cells the
/// defense reaches first are infeasible. Scoring runs sequentially in cell
/// order so stateful scorers stay deterministic.
template <typename Scorer>
ScalarGrid score_heatmap(const WorldSnapshot& world, Scorer& scorer, const GridSpec& spec,
                         double horizon = 10.0, int workers = 0) {
    spec.validate();
    world.validate();
    const double cell = world.field.length / static_cast<double>(spec.nx);
    ScalarGrid grid(spec.nx, spec.ny, cell, {0.0, 0.0});
    std::vector<std::optional<FeatureVector>> feats(spec.nx * spec.ny);

    parallel_for(spec.nx * spec.ny, workers, [&](std::size_t i) {
        const Vec2 p = grid.cell_center(i % spec.nx, i / spec.nx);
        double t_recv = std::numeric_limits<double>::infinity();
        double t_opp = std::numeric_limits<double>::infinity();
        for (const RobotState& r : world.robots) {
            const double t = time_to_point(r, p, world.limits_for(r.team));
            if (r.team == Team::Theirs)
                t_opp = std::min(t_opp, t);
            else if (r.id != world.leader_id)
                t_recv = std::min(t_recv, t);
        }
        const double margin = t_opp - t_recv;
        if (!std::isfinite(t_recv) || !(margin > 0.0)) return;
        InterceptSolution synthetic;
        synthetic.feasible = true;
        synthetic.point = p;
        synthetic.time = t_recv;
        feats[i] = extract_features(world, synthetic, margin, horizon);
    });

    for (std::size_t i = 0; i < feats.size(); ++i)
        grid.values[i] = feats[i] ? scorer.score(*feats[i]) : kInfeasible;
    return grid;
}

}  // namespace sslpass
