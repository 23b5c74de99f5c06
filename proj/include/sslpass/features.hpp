#pragma once

#include <array>

namespace sslpass {

/// Normalized description of one candidate pass, every component in [0, 1].
struct FeatureVector {
    double intercept_time = 0.0;    // receiver T_best / horizon
    double open_goal_angle = 0.0;   // goal mouth angle at P_best / pi
    double dist_to_goal = 0.0;      // |P_best - goal center| / field diagonal
    double shot_deflection = 0.0;   // pass-to-shot turn angle at P_best / pi
    double opponent_margin = 0.0;   // lead over the earliest opponent / horizon

    static constexpr std::size_t kDim = 5;

    std::array<double, kDim> to_array() const {
        return {intercept_time, open_goal_angle, dist_to_goal, shot_deflection,
                opponent_margin};
    }

    static FeatureVector from_array(const std::array<double, kDim>& a) {
        return {a[0], a[1], a[2], a[3], a[4]};
    }

    bool in_unit_range() const {
        for (double c : to_array())
            if (!(c >= 0.0 && c <= 1.0)) return false;
        return true;
    }

    bool operator==(const FeatureVector& o) const { return to_array() == o.to_array(); }
};

}  // namespace sslpass
