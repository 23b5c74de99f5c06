#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "sslpass/cacop.hpp"
#include "sslpass/features.hpp"
#include "sslpass/geometry.hpp"

namespace sslpass {

inline double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

/// Features of a candidate pass, normalized to [0,1]: times by the search
/// horizon, angles by pi, distances by the field diagonal. The two angle
/// features are the goal mouth opening seen from P_best and the turn between
/// the incoming pass and the follow-up shot line.
inline FeatureVector extract_features(const WorldSnapshot& world,
                                      const InterceptSolution& receiver, double opponent_margin,
                                      double horizon) {
    const Vec2 p = receiver.point;
    const Vec2 goal = world.field.their_goal_center();

    FeatureVector f;
    f.intercept_time = clamp01(receiver.time / horizon);
    f.open_goal_angle = clamp01(
        angle_between(world.field.their_goal_post_low() - p,
                      world.field.their_goal_post_high() - p) /
        kPi);
    f.dist_to_goal = clamp01(distance(p, goal) / world.field.diagonal());
    f.shot_deflection = clamp01(angle_between(p - world.leader().position, goal - p) / kPi);
    f.opponent_margin = clamp01(opponent_margin / horizon);
    return f;
}

/// Weighted-sum baseline scorer.
struct LinearScorer {
    std::array<double, FeatureVector::kDim> weights{};

    double score(const FeatureVector& x) const {
        const auto a = x.to_array();
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += weights[i] * a[i];
        return s;
    }
};

/// Seeded baseline that scores candidates uniformly at random; used as the
/// comparison policy in evaluations.
struct RandomScorer {
    std::mt19937_64 rng;

    explicit RandomScorer(std::uint64_t seed) : rng(seed) {}

    double score(const FeatureVector&) {
        return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    }
};

/// Highest-scoring candidate; ties resolve to the smallest
/// (action index, receiver id), independent of list order.
template <typename Scorer>
std::optional<Cacop> select_best(Scorer& scorer, const std::vector<Cacop>& candidates) {
    const Cacop* best = nullptr;
    double best_score = 0.0;
    for (const Cacop& c : candidates) {
        const double s = scorer.score(c.features);
        const bool wins =
            !best || s > best_score ||
            (s == best_score && (c.action_index < best->action_index ||
                                 (c.action_index == best->action_index &&
                                  c.receiver_id < best->receiver_id)));
        if (wins) {
            best = &c;
            best_score = s;
        }
    }
    if (!best) return std::nullopt;
    return *best;
}

}  // namespace sslpass
