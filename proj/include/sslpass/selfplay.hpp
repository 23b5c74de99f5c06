#pragma once

#include <cstdint>
#include <ostream>

#include "sslpass/rl.hpp"
#include "sslpass/sim.hpp"

namespace sslpass {

inline std::uint64_t episode_seed(std::uint64_t base, std::size_t episode) {
    return base + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(episode) + 1);
}

/// Alternating data generation and TD sweeps: each episode is played
/// epsilon-greedily against the scripted defense, its transitions go to the
/// replay buffer (and optionally the episode log), then a fixed number of
/// minibatch updates run. Fully deterministic under the training seed.
inline TrainReport run_selfplay(const SimConfig& config, const WorldSnapshot& scenario,
                                QScorer& q, const TrainParams& tparams,
                                const RewardParams& rparams, const ActionGrid& grid,
                                const SearchParams& search, std::size_t n_episodes,
                                std::ostream* episode_log = nullptr) {
    tparams.validate();
    rparams.validate();
    TrainReport report;
    if (n_episodes == 0) return report;

    ReplayBuffer buffer(tparams.replay_capacity);
    std::mt19937_64 train_rng(tparams.seed ^ 0xd1b54a32d192ed03ULL);
    if (episode_log) write_episode_log_header(*episode_log);

    for (std::size_t ep = 0; ep < n_episodes; ++ep) {
        std::mt19937_64 rng(episode_seed(tparams.seed, ep));
        WorldSnapshot start = jitter_world(scenario, config.placement_jitter, rng);
        Simulator sim(config, start);
        const double eps = tparams.epsilon.at(ep);
        const EpisodeResult episode =
            run_pass_episode(sim, q, rparams, grid, search, eps, rng);

        for (std::size_t s = 0; s < episode.transitions.size(); ++s) {
            if (episode_log)
                append_episode_step(*episode_log, {ep, s, episode.transitions[s]});
            buffer.push(episode.transitions[s]);
        }
        report.transitions_seen += episode.transitions.size();

        double err_sum = 0.0;
        std::size_t updates = 0;
        if (!buffer.empty()) {
            for (std::size_t u = 0; u < tparams.updates_per_episode; ++u) {
                err_sum += td_update_batch(q, buffer.sample(train_rng, tparams.batch_size),
                                           tparams);
                ++updates;
            }
        }
        const double mean_reward =
            episode.step_rewards.empty()
                ? 0.0
                : episode.cumulative_reward / static_cast<double>(episode.step_rewards.size());
        report.rows.push_back(
            {ep, mean_reward, updates ? err_sum / static_cast<double>(updates) : 0.0});
    }
    return report;
}

}  // namespace sslpass
