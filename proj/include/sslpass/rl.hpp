#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sslpass/features.hpp"
#include "sslpass/geometry.hpp"
#include "sslpass/mlp.hpp"

namespace sslpass {

enum class GoalEvent { None, PenaltyArea, Goal };

/// Reward shape: dense part exp(-x/a) from the ball's distance to the
/// attacked goal center, plus a sparse bonus for reaching the penalty area
/// or scoring.
struct RewardParams {
    double a = 4.33;
    double r_penalty_area = 10.0;
    double r_goal = 50.0;

    void validate() const {
        if (!(a > 0.0)) throw std::invalid_argument("RewardParams: a must be positive");
    }
};

inline double reward(const Vec2& ball_pos, GoalEvent event, const RewardParams& params,
                     const FieldGeometry& field) {
    const double x = distance(ball_pos, field.their_goal_center());
    const double r1 = std::exp(-x / params.a);
    double r2 = 0.0;
    if (event == GoalEvent::PenaltyArea) r2 = params.r_penalty_area;
    if (event == GoalEvent::Goal) r2 = params.r_goal;
    return r1 + r2;
}

/// One collaboration step of the pass MDP: the chosen candidate's features,
/// the observed reward, and the feasible candidates of the next state
/// (empty when the episode ended or no feasible pass existed).
struct Transition {
    FeatureVector state_features;
    double reward = 0.0;
    std::vector<FeatureVector> next_candidates;
    bool terminal = false;
};

struct EpsilonSchedule {
    double start = 0.3;
    double end = 0.02;
    std::size_t decay_episodes = 400;

    double at(std::size_t episode) const {
        if (decay_episodes == 0 || episode >= decay_episodes) return end;
        const double frac = static_cast<double>(episode) / static_cast<double>(decay_episodes);
        return start + (end - start) * frac;
    }
};

struct TrainParams {
    double alpha = 1e-3;
    double gamma = 0.95;
    std::size_t replay_capacity = 50'000;
    std::size_t batch_size = 64;
    EpsilonSchedule epsilon;
    std::uint64_t seed = 1;
    bool update_biases = true;
    std::size_t offline_updates = 2000;
    std::size_t updates_per_episode = 16;

    void validate() const {
        // alpha = 0 is allowed as an explicit no-op step
        if (!(alpha >= 0.0)) throw std::invalid_argument("TrainParams: alpha must be >= 0");
        if (!(gamma >= 0.0 && gamma < 1.0))
            throw std::invalid_argument("TrainParams: gamma must be in [0,1)");
        if (batch_size == 0 || replay_capacity < batch_size)
            throw std::invalid_argument("TrainParams: capacity must be >= batch size >= 1");
    }
};

/// Bounded transition store, oldest-first eviction, uniform sampling.
class ReplayBuffer {
  public:
    explicit ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
        if (capacity_ == 0) throw std::invalid_argument("ReplayBuffer: zero capacity");
    }

    void push(Transition t) {
        if (buf_.size() == capacity_) buf_.pop_front();
        buf_.push_back(std::move(t));
    }

    std::size_t size() const { return buf_.size(); }
    bool empty() const { return buf_.empty(); }
    const Transition& operator[](std::size_t i) const { return buf_[i]; }

    /// Uniform sample with replacement.
    std::vector<const Transition*> sample(std::mt19937_64& rng, std::size_t n) const {
        std::vector<const Transition*> out;
        out.reserve(n);
        std::uniform_int_distribution<std::size_t> pick(0, buf_.size() - 1);
        for (std::size_t i = 0; i < n; ++i) out.push_back(&buf_[pick(rng)]);
        return out;
    }

  private:
    std::size_t capacity_;
    std::deque<Transition> buf_;
};

namespace detail {

inline double td_target(const QScorer& q, const Transition& t, double gamma) {
    double bootstrap = 0.0;
    if (!t.terminal && !t.next_candidates.empty()) {
        bootstrap = -std::numeric_limits<double>::infinity();
        for (const FeatureVector& x : t.next_candidates)
            bootstrap = std::max(bootstrap, q.score(x));
    }
    return t.reward + gamma * bootstrap;
}

}  // namespace detail

/// One temporal-difference step on a single transition:
/// Q(s,a) moves toward reward + gamma * max_a' Q(s',a') by alpha, with the
/// bootstrap taken from the pre-update network (semi-gradient). Returns the
/// signed TD error, target - Q(s,a), measured before the update.
inline double td_update(QScorer& q, const Transition& t, const TrainParams& params) {
    params.validate();
    const double target = detail::td_target(q, t, params.gamma);
    const double delta = target - q.score(t.state_features);
    QScorer::Gradients grad = QScorer::Gradients::zeros_like(q);
    q.forward_backward(t.state_features, target, grad);
    q.apply_step(grad, params.alpha, params.update_biases);
    return delta;
}

/// Minibatch variant: mean gradient over the batch, targets all taken from
/// the pre-update network. Returns the mean absolute TD error.
inline double td_update_batch(QScorer& q, const std::vector<const Transition*>& batch,
                              const TrainParams& params) {
    if (batch.empty()) return 0.0;
    QScorer::Gradients grad = QScorer::Gradients::zeros_like(q);
    double abs_err = 0.0;
    for (const Transition* t : batch) {
        const double target = detail::td_target(q, *t, params.gamma);
        abs_err += std::fabs(target - q.score(t->state_features));
        q.forward_backward(t->state_features, target, grad);
    }
    grad.scale(1.0 / static_cast<double>(batch.size()));
    q.apply_step(grad, params.alpha, params.update_biases);
    return abs_err / static_cast<double>(batch.size());
}

// --- episode log ------------------------------------------------------------
//
// Line-delimited UTF-8: a version tag on line 1, then one JSON object per
// collaboration step.

constexpr const char* kEpisodeLogVersion = "episode_log_v1";

struct EpisodeLogRecord {
    std::uint64_t episode_id = 0;
    std::uint64_t step = 0;
    Transition transition;
};

inline void write_episode_log_header(std::ostream& out) { out << kEpisodeLogVersion << '\n'; }

inline void append_episode_step(std::ostream& out, const EpisodeLogRecord& rec) {
    nlohmann::json j;
    j["episode_id"] = rec.episode_id;
    j["step"] = rec.step;
    j["features"] = rec.transition.state_features.to_array();
    j["reward"] = rec.transition.reward;
    j["terminal"] = rec.transition.terminal;
    auto& next = j["next_candidate_features"] = nlohmann::json::array();
    for (const FeatureVector& x : rec.transition.next_candidates) next.push_back(x.to_array());
    out << j.dump() << '\n';
}

struct EpisodeLogStats {
    std::size_t records = 0;
    std::size_t malformed = 0;
};

/// Parses an episode log. Malformed records are skipped and counted; more
/// than 10% malformed aborts the load.
inline std::vector<EpisodeLogRecord> read_episode_log(std::istream& in,
                                                      EpisodeLogStats* stats_out = nullptr) {
    std::string line;
    if (!std::getline(in, line) || line != kEpisodeLogVersion)
        throw std::runtime_error("episode log: missing version tag (expected episode_log_v1)");

    std::vector<EpisodeLogRecord> records;
    EpisodeLogStats stats;
    std::size_t total_lines = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++total_lines;
        try {
            const nlohmann::json j = nlohmann::json::parse(line);
            EpisodeLogRecord rec;
            rec.episode_id = j.at("episode_id").get<std::uint64_t>();
            rec.step = j.at("step").get<std::uint64_t>();
            std::array<double, FeatureVector::kDim> f{};
            for (std::size_t i = 0; i < f.size(); ++i) f[i] = j.at("features").at(i).get<double>();
            rec.transition.state_features = FeatureVector::from_array(f);
            rec.transition.reward = j.at("reward").get<double>();
            rec.transition.terminal = j.at("terminal").get<bool>();
            for (const auto& cand : j.at("next_candidate_features")) {
                std::array<double, FeatureVector::kDim> c{};
                for (std::size_t i = 0; i < c.size(); ++i) c[i] = cand.at(i).get<double>();
                rec.transition.next_candidates.push_back(FeatureVector::from_array(c));
            }
            records.push_back(std::move(rec));
        } catch (const std::exception&) {
            ++stats.malformed;
        }
    }
    stats.records = records.size();
    if (total_lines > 0 &&
        static_cast<double>(stats.malformed) > 0.10 * static_cast<double>(total_lines))
        throw std::runtime_error("episode log: more than 10% malformed records");
    if (stats_out) *stats_out = stats;
    return records;
}

// --- training reports --------------------------------------------------------

struct TrainReportRow {
    std::size_t episode = 0;
    double mean_reward = 0.0;
    double mean_td_error = 0.0;
};

struct TrainReport {
    std::vector<TrainReportRow> rows;
    std::size_t transitions_seen = 0;
    std::size_t malformed_skipped = 0;

    void write(std::ostream& out) const {
        out << "episode mean_reward mean_td_error\n";
        char buf[96];
        for (const auto& r : rows) {
            std::snprintf(buf, sizeof buf, "%zu %.6f %.6f\n", r.episode, r.mean_reward,
                          r.mean_td_error);
            out << buf;
        }
    }
};

/// Offline replay training: fill the buffer from a log, then run uniformly
/// sampled minibatch TD updates. Deterministic under a fixed seed.
inline TrainReport run_offline(std::istream& log, QScorer& q, const TrainParams& params) {
    params.validate();
    EpisodeLogStats stats;
    const std::vector<EpisodeLogRecord> records = read_episode_log(log, &stats);

    TrainReport report;
    report.transitions_seen = stats.records;
    report.malformed_skipped = stats.malformed;
    if (records.empty()) return report;

    ReplayBuffer buffer(params.replay_capacity);
    for (const EpisodeLogRecord& rec : records) buffer.push(rec.transition);

    std::mt19937_64 rng(params.seed);
    const std::size_t report_every = std::max<std::size_t>(1, params.offline_updates / 20);
    double reward_acc = 0.0, err_acc = 0.0;
    std::size_t acc_n = 0;
    for (std::size_t u = 0; u < params.offline_updates; ++u) {
        const auto batch = buffer.sample(rng, params.batch_size);
        const double err = td_update_batch(q, batch, params);
        double batch_reward = 0.0;
        for (const Transition* t : batch) batch_reward += t->reward;
        reward_acc += batch_reward / static_cast<double>(batch.size());
        err_acc += err;
        ++acc_n;
        if ((u + 1) % report_every == 0 || u + 1 == params.offline_updates) {
            report.rows.push_back({u + 1, reward_acc / static_cast<double>(acc_n),
                                   err_acc / static_cast<double>(acc_n)});
            reward_acc = err_acc = 0.0;
            acc_n = 0;
        }
    }
    return report;
}

inline TrainReport run_offline_file(const std::string& path, QScorer& q,
                                    const TrainParams& params) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open episode log: " + path);
    return run_offline(in, q, params);
}

}  // namespace sslpass
