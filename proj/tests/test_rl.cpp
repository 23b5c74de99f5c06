#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include "sslpass/rl.hpp"

using namespace sslpass;

namespace {

const FieldGeometry kField{};
const RewardParams kReward{};

FeatureVector one_hot(std::size_t i) {
    std::array<double, FeatureVector::kDim> a{};
    a[i] = 1.0;
    return FeatureVector::from_array(a);
}

// --- value-iteration oracle for small MDPs ---------------------------------
struct MdpAction {
    double reward;
    int next_state;  // -1: terminal
};
using Mdp = std::vector<std::vector<MdpAction>>;  // per-state actions

std::vector<std::vector<double>> value_iteration(const Mdp& mdp, double gamma) {
    std::vector<std::vector<double>> q(mdp.size());
    for (std::size_t s = 0; s < mdp.size(); ++s) q[s].assign(mdp[s].size(), 0.0);
    for (int iter = 0; iter < 10'000; ++iter) {
        double change = 0.0;
        for (std::size_t s = 0; s < mdp.size(); ++s) {
            for (std::size_t a = 0; a < mdp[s].size(); ++a) {
                double boot = 0.0;
                const int ns = mdp[s][a].next_state;
                if (ns >= 0) {
                    boot = -1e300;
                    for (double v : q[static_cast<std::size_t>(ns)]) boot = std::max(boot, v);
                }
                const double updated = mdp[s][a].reward + gamma * boot;
                change = std::max(change, std::fabs(updated - q[s][a]));
                q[s][a] = updated;
            }
        }
        if (change < 1e-12) break;
    }
    return q;
}

}  // namespace

TEST_CASE("reward: reference values") {
    // 3 m from the goal mouth center gives the half-height dense reward
    const Vec2 three_m{kField.length - 3.0, kField.width / 2.0};
    CHECK(reward(three_m, GoalEvent::None, kReward, kField) == Catch::Approx(0.5).margin(1e-3));

    // scoring from the goal center itself: exp(0) + 50
    CHECK(reward(kField.their_goal_center(), GoalEvent::Goal, kReward, kField) == 51.0);

    // far corner, independent high-precision exponential as the reference
    const Vec2 far{kField.length - 15.0, kField.width / 2.0};
    const double expect = static_cast<double>(std::exp(-15.0L / 4.33L));
    CHECK(reward(far, GoalEvent::None, kReward, kField) == Catch::Approx(expect).margin(1e-12));
    CHECK(reward(far, GoalEvent::None, kReward, kField) == Catch::Approx(0.0313).margin(1e-4));
}

TEST_CASE("reward: dense part stays in (0,1] across the field") {
    for (int ix = 0; ix < 100; ++ix) {
        for (int iy = 0; iy < 100; ++iy) {
            const Vec2 p{kField.length * (ix + 0.5) / 100.0, kField.width * (iy + 0.5) / 100.0};
            const double r = reward(p, GoalEvent::None, kReward, kField);
            CHECK(r > 0.0);
            CHECK(r <= 1.0);
            const double with_goal = reward(p, GoalEvent::Goal, kReward, kField);
            CHECK(with_goal <= 51.0);
        }
    }
}

TEST_CASE("td_update reproduces the tabular rule on one-hot features") {
    TrainParams params;
    params.alpha = 0.5;
    params.gamma = 0.9;
    params.update_biases = false;  // keep the 5->1 surrogate a true table

    SECTION("zero table, reward 1 moves the entry to 0.5") {
        QScorer q = QScorer::zeros({5, 1});
        Transition t;
        t.state_features = one_hot(0);
        t.reward = 1.0;
        t.next_candidates = {one_hot(1)};  // scores 0 under the zero table
        const double delta = td_update(q, t, params);
        CHECK(delta == Catch::Approx(1.0).margin(1e-12));
        CHECK(q.score(one_hot(0)) == Catch::Approx(0.5).margin(1e-12));
        CHECK(q.score(one_hot(1)) == 0.0);  // untouched entry
    }

    SECTION("terminal zero-reward transition has TD error -Q(s,a)") {
        QScorer q = QScorer::zeros({5, 1});
        q.weights[0][2] = 0.8;
        Transition t;
        t.state_features = one_hot(2);
        t.reward = 0.0;
        t.terminal = true;
        const double delta = td_update(q, t, params);
        CHECK(delta == Catch::Approx(-0.8).margin(1e-12));
        CHECK(q.score(one_hot(2)) == Catch::Approx(0.8 + 0.5 * (-0.8)).margin(1e-12));
    }

    SECTION("zero learning rate leaves the network bit-identical") {
        std::mt19937_64 rng(12);
        QScorer q = QScorer::glorot({5, 8, 1}, rng);
        const QScorer before = q;
        TrainParams frozen = params;
        frozen.alpha = 0.0;
        Transition t;
        t.state_features = one_hot(1);
        t.reward = 3.0;
        td_update(q, t, frozen);
        CHECK(q.weights == before.weights);
        CHECK(q.biases == before.biases);
    }

    SECTION("hand-evaluated chain of tabular updates") {
        QScorer q = QScorer::zeros({5, 1});
        std::array<double, 5> table{};  // hand-maintained Eq.-2 table
        std::mt19937_64 rng(77);
        std::uniform_int_distribution<int> state(0, 4);
        std::uniform_real_distribution<double> rew(-1.0, 2.0);
        for (int step = 0; step < 20; ++step) {
            const int s = state(rng);
            const int s2 = state(rng);
            Transition t;
            t.state_features = one_hot(static_cast<std::size_t>(s));
            t.reward = rew(rng);
            t.terminal = step % 4 == 3;
            if (!t.terminal) t.next_candidates = {one_hot(static_cast<std::size_t>(s2))};

            const double target =
                t.reward + (t.terminal ? 0.0 : params.gamma * table[static_cast<std::size_t>(s2)]);
            table[static_cast<std::size_t>(s)] +=
                params.alpha * (target - table[static_cast<std::size_t>(s)]);

            td_update(q, t, params);
            for (std::size_t i = 0; i < 5; ++i)
                CHECK(q.score(one_hot(i)) == Catch::Approx(table[i]).margin(1e-9));
        }
    }
}

TEST_CASE("chain MDP training converges to the value-iteration solution") {
    // s0 --a0 (r=0)--> s1 --b0 (r=1)--> end ; s0 --a1 (r=0.2)--> end
    const Mdp chain = {{{0.0, 1}, {0.2, -1}}, {{1.0, -1}}};
    const double gamma = 0.9;
    const auto q_star = value_iteration(chain, gamma);
    REQUIRE(q_star[0][0] == Catch::Approx(0.9).margin(1e-9));
    REQUIRE(q_star[0][1] == Catch::Approx(0.2).margin(1e-9));
    REQUIRE(q_star[1][0] == Catch::Approx(1.0).margin(1e-9));

    // feature encoding: (s0,a0)=e0, (s0,a1)=e1, (s1,b0)=e2
    Transition t00{one_hot(0), 0.0, {one_hot(2)}, false};
    Transition t01{one_hot(1), 0.2, {}, true};
    Transition t10{one_hot(2), 1.0, {}, true};

    TrainParams params;
    params.alpha = 0.02;
    params.gamma = gamma;
    params.batch_size = 16;
    params.seed = 2024;

    std::mt19937_64 init_rng(params.seed);
    QScorer q = QScorer::glorot({5, 16, 1}, init_rng);
    ReplayBuffer buffer(params.replay_capacity);
    for (int i = 0; i < 200; ++i) {
        buffer.push(t00);
        buffer.push(t01);
        buffer.push(t10);
    }
    std::mt19937_64 rng(params.seed + 1);
    double mean_abs_err = 1.0;
    for (int u = 0; u < 6000; ++u)
        mean_abs_err = td_update_batch(q, buffer.sample(rng, params.batch_size), params);

    CHECK(std::fabs(q.score(one_hot(0)) - q_star[0][0]) < 0.05);
    CHECK(std::fabs(q.score(one_hot(1)) - q_star[0][1]) < 0.05);
    CHECK(std::fabs(q.score(one_hot(2)) - q_star[1][0]) < 0.05);
    CHECK(mean_abs_err < 0.05);
}

TEST_CASE("replay buffer caps its size and evicts oldest-first") {
    ReplayBuffer buf(4);
    for (int i = 0; i < 7; ++i) {
        Transition t;
        t.reward = static_cast<double>(i);
        buf.push(t);
        CHECK(buf.size() <= 4);
    }
    CHECK(buf.size() == 4);
    CHECK(buf[0].reward == 3.0);
    CHECK(buf[3].reward == 6.0);
}

TEST_CASE("episode log round-trips and polices malformed records") {
    std::stringstream log;
    write_episode_log_header(log);
    for (std::uint64_t step = 0; step < 5; ++step) {
        EpisodeLogRecord rec;
        rec.episode_id = 3;
        rec.step = step;
        rec.transition.state_features = one_hot(step % 5);
        rec.transition.reward = 0.25 * static_cast<double>(step);
        rec.transition.terminal = step == 4;
        if (step < 4) rec.transition.next_candidates = {one_hot(0), one_hot(1)};
        append_episode_step(log, rec);
    }

    SECTION("clean read") {
        EpisodeLogStats stats;
        const auto records = read_episode_log(log, &stats);
        REQUIRE(records.size() == 5);
        CHECK(stats.malformed == 0);
        CHECK(records[2].transition.reward == 0.5);
        CHECK(records[4].transition.terminal);
        CHECK(records[1].transition.next_candidates.size() == 2);
    }

    SECTION("a few malformed lines are skipped and counted") {
        std::stringstream dirty;
        dirty << log.str() << "{\"bad json\n"
              << R"({"episode_id":0,"step":0})" << '\n';
        // re-add enough clean lines to stay under the 10% abort threshold
        for (std::uint64_t step = 0; step < 20; ++step) {
            EpisodeLogRecord rec;
            rec.episode_id = 4;
            rec.step = step;
            rec.transition.state_features = one_hot(0);
            append_episode_step(dirty, rec);
        }
        EpisodeLogStats stats;
        const auto records = read_episode_log(dirty, &stats);
        CHECK(records.size() == 25);
        CHECK(stats.malformed == 2);
    }

    SECTION("mostly-broken logs abort") {
        std::stringstream broken;
        write_episode_log_header(broken);
        broken << "garbage 1\ngarbage 2\ngarbage 3\n";
        CHECK_THROWS_AS(read_episode_log(broken), std::runtime_error);
    }

    SECTION("missing version tag aborts") {
        std::stringstream untagged;
        untagged << "{}\n";
        CHECK_THROWS_AS(read_episode_log(untagged), std::runtime_error);
    }
}

TEST_CASE("run_offline: empty log leaves the network unchanged") {
    std::stringstream log;
    write_episode_log_header(log);
    std::mt19937_64 rng(9);
    QScorer q = QScorer::glorot({5, 8, 1}, rng);
    const QScorer before = q;
    const TrainReport report = run_offline(log, q, TrainParams{});
    CHECK(report.rows.empty());
    CHECK(q.weights == before.weights);
    CHECK(q.biases == before.biases);
}

TEST_CASE("run_offline: fixed seed gives identical weights across runs") {
    std::stringstream log;
    write_episode_log_header(log);
    std::mt19937_64 gen(4242);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::uint64_t step = 0; step < 60; ++step) {
        EpisodeLogRecord rec;
        rec.episode_id = step / 6;
        rec.step = step % 6;
        rec.transition.state_features = {u(gen), u(gen), u(gen), u(gen), u(gen)};
        rec.transition.reward = u(gen);
        rec.transition.terminal = step % 6 == 5;
        if (!rec.transition.terminal)
            rec.transition.next_candidates = {{u(gen), u(gen), u(gen), u(gen), u(gen)}};
        append_episode_step(log, rec);
    }
    const std::string text = log.str();

    TrainParams params;
    params.offline_updates = 200;
    params.seed = 77;

    auto train_once = [&]() {
        std::stringstream in(text);
        std::mt19937_64 rng(params.seed);
        QScorer q = QScorer::glorot({5, 16, 1}, rng);
        run_offline(in, q, params);
        std::stringstream dump(std::ios::in | std::ios::out | std::ios::binary);
        write_qscorer(dump, q);
        return dump.str();
    };
    CHECK(train_once() == train_once());
}
