#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <vector>

#include "sslpass/cacop.hpp"
#include "sslpass/interception.hpp"
#include "sslpass/parallel.hpp"
#include "sslpass/scoring.hpp"

namespace sslpass {

enum class SearchMode { Full, Pruned };

struct SearchParams {
    InterceptParams intercept;
    double margin_min = 0.0;  // required receiver lead over the best opponent
    SearchMode mode = SearchMode::Pruned;
    int workers = 0;  // 0 = hardware concurrency

    void validate() const {
        intercept.validate();
        // pruned scans stop at the first opponent interception, which is only
        // sound when beaten passes can never qualify
        if (margin_min < 0.0)
            throw std::invalid_argument("SearchParams: margin_min must be >= 0");
    }
};

struct SearchStats {
    std::uint64_t reach_checks = 0;   // time_to_point evaluations inside scans
    std::uint64_t actions = 0;
    std::uint64_t cacops = 0;
};

namespace detail {

/// Stack-resident scan state for one action; sized for the 24-robot cap so
/// the per-action hot loop performs no heap allocation.
struct ScanScratch {
    std::array<const RobotState*, WorldSnapshot::kMaxRobots> robot{};
    std::array<double, WorldSnapshot::kMaxRobots> v_reach_x{};  // speed-limit bound per axis
    std::array<double, WorldSnapshot::kMaxRobots> v_reach_y{};
    std::array<InterceptSolution, WorldSnapshot::kMaxRobots> sols{};
    std::array<bool, WorldSnapshot::kMaxRobots> resolved{};
    std::size_t count = 0;
};

/// Shared time scan for one action: every unresolved robot is tested against
/// the sample P_k until it resolves. Full mode runs until all robots resolve
/// or the horizon ends (equivalent to per-robot intercept()); pruned mode
/// abandons the scan right after the first sample at which an opponent
/// resolves, since no teammate can strictly beat it from then on.
inline void scan_action(const WorldSnapshot& world, const BallTrajectory& traj,
                        const InterceptParams& params, SearchMode mode, ScanScratch& s,
                        std::uint64_t& reach_checks) {
    s.count = 0;
    for (const RobotState& r : world.robots) {
        if (r.id == world.leader_id) continue;
        const std::size_t i = s.count++;
        s.robot[i] = &r;
        // no profile covers ground faster than max(|v0_axis|, v_axis_cap)
        const double v_ax = axis_budget(world.limits_for(r.team).v_max);
        s.v_reach_x[i] = std::max(v_ax, std::fabs(r.velocity.x));
        s.v_reach_y[i] = std::max(v_ax, std::fabs(r.velocity.y));
        s.sols[i] = InterceptSolution{};
        s.sols[i].robot_id = r.id;
        s.resolved[i] = false;
    }

    std::size_t remaining = s.count;
    const auto steps = static_cast<std::size_t>(std::floor(params.horizon / params.dt));
    for (std::size_t k = 0; k <= steps && remaining > 0; ++k) {
        const double t = static_cast<double>(k) * params.dt;
        if (!traj.interceptable_at(t)) continue;
        const Vec2 p = traj.position_at(t);
        if (!world.field.contains(p)) continue;

        bool opponent_resolved = false;
        for (std::size_t i = 0; i < s.count; ++i) {
            if (s.resolved[i]) continue;
            ++reach_checks;
            const RobotState& r = *s.robot[i];
            if (std::fabs(p.x - r.position.x) > s.v_reach_x[i] * t ||
                std::fabs(p.y - r.position.y) > s.v_reach_y[i] * t)
                continue;
            if (time_to_point(r, p, world.limits_for(r.team)) <= t) {
                s.resolved[i] = true;
                s.sols[i].feasible = true;
                s.sols[i].point = p;
                s.sols[i].time = t;
                --remaining;
                if (r.team == Team::Theirs) opponent_resolved = true;
            }
        }
        if (mode == SearchMode::Pruned && opponent_resolved) break;
    }
}

}  // namespace detail

/// Interception outcome for every non-leader robot after the leader executes
/// `action`, in snapshot order. Equivalent to calling intercept() per robot.
inline std::vector<InterceptSolution> predict_outcome(const WorldSnapshot& world,
                                                      const KickAction& action,
                                                      const BallPhysicsParams& physics,
                                                      const InterceptParams& params = {}) {
    action.validate();
    params.validate();
    const BallTrajectory traj = action_trajectory(world.ball.position, action, physics);
    std::uint64_t checks = 0;
    detail::ScanScratch scratch;
    detail::scan_action(world, traj, params, SearchMode::Full, scratch, checks);
    return {scratch.sols.begin(), scratch.sols.begin() + scratch.count};
}

/// The feasible pass set: for every discretized action, every teammate who
/// intercepts the kicked ball strictly earlier (by more than margin_min)
/// than every opponent. Actions fan out over workers; each action writes its
/// own slot, so the set is identical for any worker count and is returned
/// sorted by (action index, receiver id).
inline std::vector<Cacop> build_feasible_set(const WorldSnapshot& world, const ActionGrid& grid,
                                             const BallPhysicsParams& physics,
                                             const SearchParams& params = {},
                                             SearchStats* stats_out = nullptr) {
    world.validate();
    params.validate();
    const std::vector<KickAction> actions = enumerate_actions(grid);

    std::vector<std::vector<Cacop>> slots(actions.size());
    std::atomic<std::uint64_t> total_checks{0};

    parallel_for(actions.size(), params.workers, [&](std::size_t i) {
        const BallTrajectory traj =
            action_trajectory(world.ball.position, actions[i], physics);
        std::uint64_t checks = 0;
        detail::ScanScratch scratch;
        detail::scan_action(world, traj, params.intercept, params.mode, scratch, checks);
        total_checks.fetch_add(checks, std::memory_order_relaxed);

        double earliest_opponent = std::numeric_limits<double>::infinity();
        for (std::size_t s = 0; s < scratch.count; ++s)
            if (scratch.robot[s]->team == Team::Theirs && scratch.sols[s].feasible)
                earliest_opponent = std::min(earliest_opponent, scratch.sols[s].time);

        std::vector<Cacop>& out = slots[i];
        for (std::size_t s = 0; s < scratch.count; ++s) {
            const InterceptSolution& sol = scratch.sols[s];
            if (scratch.robot[s]->team != Team::Ours || !sol.feasible) continue;
            const double margin = earliest_opponent - sol.time;
            if (!(margin > params.margin_min)) continue;
            Cacop c;
            c.action_index = i;
            c.action = actions[i];
            c.receiver_id = sol.robot_id;
            c.receiver_solution = sol;
            c.opponent_margin = margin;
            c.features = extract_features(world, sol, margin, params.intercept.horizon);
            out.push_back(c);
        }
        std::sort(out.begin(), out.end(),
                  [](const Cacop& a, const Cacop& b) { return a.receiver_id < b.receiver_id; });
    });

    std::vector<Cacop> set;
    for (auto& slot : slots)
        for (Cacop& c : slot) set.push_back(std::move(c));

    if (stats_out) {
        stats_out->reach_checks = total_checks.load();
        stats_out->actions = actions.size();
        stats_out->cacops = set.size();
    }
    return set;
}

}  // namespace sslpass
