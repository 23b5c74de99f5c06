// sslpass command-line tool: interception heat maps, pass planning, scorer
// training, evaluation, and search benchmarks over scenario files.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "sslpass/sslpass.hpp"

namespace {

using namespace sslpass;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

using ScorerVariant = std::variant<LinearScorer, QScorer>;

ScorerVariant make_scorer(const Config& config, const std::string& weights_path) {
    if (weights_path.empty()) return LinearScorer{config.linear_weights};
    return load_qscorer(weights_path);
}

struct ScorerAdapter {
    ScorerVariant* s;
    double score(const FeatureVector& x) {
        return std::visit([&](auto& scorer) { return scorer.score(x); }, *s);
    }
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

int cmd_heatmap(const Config& config, const std::string& scene,
                std::optional<double> ball_speed, std::size_t nx, std::size_t ny,
                const std::string& out_path) {
    const WorldSnapshot world = load_scenario_file(scene, config);
    BallState ball = world.ball;
    if (ball_speed) {
        Vec2 dir = ball.velocity.unit();
        if (dir == Vec2{0.0, 0.0}) dir = {1.0, 0.0};
        ball.velocity = dir * *ball_speed;
    }
    const ScalarGrid grid =
        intercept_heatmap(ball, config.our_limits, config.physics, config.field, {nx, ny},
                          config.search.intercept, config.workers);
    auto out = open_out(out_path);
    write_grid(out, grid);
    std::size_t feasible = 0;
    for (double v : grid.values)
        if (std::isfinite(v)) ++feasible;
    std::printf("heat map %zux%zu -> %s (%zu/%zu cells feasible)\n", grid.nx, grid.ny,
                out_path.c_str(), feasible, grid.values.size());
    return kExitOk;
}

int cmd_plan(const Config& config, const std::string& scene, const std::string& weights,
             const std::string& out_path) {
    const WorldSnapshot world = load_scenario_file(scene, config);
    SearchStats stats;
    const std::vector<Cacop> set =
        build_feasible_set(world, config.action_grid, config.physics, config.search, &stats);
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        write_cacops(out, set);
    } else {
        write_cacops(std::cout, set);
    }
    std::printf("feasible set: %zu pairs from %zu actions (%llu reach checks)\n", set.size(),
                stats.actions, static_cast<unsigned long long>(stats.reach_checks));
    ScorerVariant scorer = make_scorer(config, weights);
    ScorerAdapter adapter{&scorer};
    const auto best = select_best(adapter, set);
    if (!best) {
        std::printf("no feasible pass\n");
        return kExitOk;
    }
    std::printf("best: %s\n", cacop_to_json(*best).dump().c_str());
    return kExitOk;
}

int cmd_train(const Config& config, const std::string& mode, const std::string& log_path,
              const std::string& scenario_path, std::size_t episodes,
              const std::string& weights_out, const std::string& report_out,
              const std::string& log_out, const std::string& init_weights) {
    QScorer q = [&] {
        if (!init_weights.empty()) return load_qscorer(init_weights);
        std::mt19937_64 rng(config.seed);
        return QScorer::glorot({FeatureVector::kDim, 32, 32, 1}, rng);
    }();

    TrainReport report;
    if (mode == "offline") {
        if (log_path.empty()) throw std::runtime_error("train --mode offline needs --log");
        report = run_offline_file(log_path, q, config.train);
    } else if (mode == "selfplay") {
        const WorldSnapshot scenario = scenario_path.empty()
                                           ? default_scenario_4v4(config)
                                           : load_scenario_file(scenario_path, config);
        std::ofstream log_sink;
        std::ostream* log = nullptr;
        if (!log_out.empty()) {
            log_sink = open_out(log_out);
            log = &log_sink;
        }
        report = run_selfplay(config.sim, scenario, q, config.train, config.reward_params,
                              config.action_grid, config.search, episodes, log);
    } else {
        throw std::runtime_error("train --mode must be offline or selfplay");
    }

    save_qscorer(weights_out, q);
    {
        auto text = open_out(weights_out + ".txt");
        export_qscorer_text(text, q);
    }
    if (!report_out.empty()) {
        auto out = open_out(report_out);
        report.write(out);
    } else {
        report.write(std::cout);
    }
    std::printf("trained on %zu transitions (%zu malformed skipped); weights -> %s\n",
                report.transitions_seen, report.malformed_skipped, weights_out.c_str());
    return kExitOk;
}

int cmd_eval(const Config& config, const std::string& weights, const std::string& scenario_path,
             std::size_t episodes, const std::string& heatmap_out,
             const std::string& report_out) {
    const WorldSnapshot scenario = scenario_path.empty()
                                       ? default_scenario_4v4(config)
                                       : load_scenario_file(scenario_path, config);
    ScorerVariant scorer = make_scorer(config, weights);
    ScorerAdapter adapter{&scorer};

    const EvalReport report = run_4v4(config.sim, scenario, adapter, config.reward_params,
                                      config.action_grid, config.search, episodes);
    if (!report_out.empty()) {
        auto out = open_out(report_out);
        report.write(out);
    }
    report.write(std::cout);

    if (!heatmap_out.empty()) {
        const ScalarGrid grid = score_heatmap(scenario, adapter, GridSpec{},
                                              config.search.intercept.horizon, config.workers);
        auto out = open_out(heatmap_out);
        write_grid(out, grid);
        std::printf("score heat map -> %s\n", heatmap_out.c_str());
    }
    return kExitOk;
}

int cmd_bench(const Config& config, const std::string& scene, int frames,
              std::vector<int> worker_counts, const std::string& out_path) {
    const WorldSnapshot world = load_scenario_file(scene, config);
    if (worker_counts.empty()) worker_counts = {1, resolve_workers(0)};

    std::ostringstream table;
    table << "mode workers frames ms_per_frame reach_checks cacops\n";
    std::string reference_payload;
    bool consistent = true;

    for (const SearchMode mode : {SearchMode::Full, SearchMode::Pruned}) {
        for (const int workers : worker_counts) {
            SearchParams params = config.search;
            params.mode = mode;
            params.workers = workers;
            SearchStats stats;
            std::vector<Cacop> set;
            const auto begin = std::chrono::steady_clock::now();
            for (int f = 0; f < frames; ++f)
                set = build_feasible_set(world, config.action_grid, config.physics, params,
                                         &stats);
            const auto end = std::chrono::steady_clock::now();
            const double ms =
                std::chrono::duration<double, std::milli>(end - begin).count() / frames;

            std::ostringstream payload;
            write_cacops(payload, set);
            if (reference_payload.empty())
                reference_payload = payload.str();
            else if (payload.str() != reference_payload)
                consistent = false;

            char row[160];
            std::snprintf(row, sizeof row, "%s %d %d %.3f %llu %zu\n",
                          mode == SearchMode::Full ? "full" : "pruned", workers, frames, ms,
                          static_cast<unsigned long long>(stats.reach_checks), set.size());
            table << row;
        }
    }

    std::fputs(table.str().c_str(), stdout);
    if (!out_path.empty()) {
        auto out = open_out(out_path);
        out << table.str();
    }
    if (!consistent) {
        std::fprintf(stderr, "error: result payloads differ across modes/workers\n");
        return kExitData;
    }
    std::printf("result payloads identical across modes and worker counts\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pass planning and desk-scale simulation for robot soccer"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::uint64_t seed = 0;
    int workers = 0;
    app.add_option("--config", config_path, "configuration file (key = value)");
    auto* seed_opt = app.add_option("--seed", seed, "override the configured seed");
    auto* workers_opt = app.add_option("--workers", workers, "worker threads (0 = all cores)");

    auto* heatmap = app.add_subcommand("heatmap", "interception-time heat map for a scene");
    std::string hm_scene, hm_out = "heatmap.grid";
    double hm_speed = -1.0;
    std::size_t hm_nx = 60, hm_ny = 45;
    heatmap->add_option("--scene", hm_scene, "scenario file")->required();
    heatmap->add_option("--ball-speed", hm_speed, "override ball speed, m/s");
    heatmap->add_option("--nx", hm_nx, "grid cells along the field length");
    heatmap->add_option("--ny", hm_ny, "grid cells along the field width");
    heatmap->add_option("--out", hm_out, "output grid file");

    auto* plan = app.add_subcommand("plan", "feasible pass set and the best pick for a scene");
    std::string plan_scene, plan_weights, plan_out;
    plan->add_option("--scene", plan_scene, "scenario file")->required();
    plan->add_option("--weights", plan_weights, "scorer weight file (default: linear baseline)");
    plan->add_option("--out", plan_out, "write the feasible set as line records");

    auto* train = app.add_subcommand("train", "train the scorer offline or by self-play");
    std::string train_mode = "selfplay", train_log, train_scenario;
    std::string train_weights_out = "weights.qpw", train_report_out, train_log_out, train_init;
    std::size_t train_episodes = 500;
    train->add_option("--mode", train_mode, "offline | selfplay");
    train->add_option("--log", train_log, "episode log to replay (offline)");
    train->add_option("--scenario", train_scenario, "scenario file (selfplay)");
    train->add_option("--episodes", train_episodes, "self-play episodes");
    train->add_option("--out", train_weights_out, "weight file to write");
    train->add_option("--report-out", train_report_out, "training report file");
    train->add_option("--log-out", train_log_out, "append generated episodes here (selfplay)");
    train->add_option("--init-weights", train_init, "start from these weights");

    auto* eval = app.add_subcommand("eval", "4v4 evaluation and pass-score heat map");
    std::string eval_weights, eval_scenario, eval_heatmap, eval_report;
    std::size_t eval_episodes = 100;
    eval->add_option("--weights", eval_weights, "scorer weight file (default: linear baseline)");
    eval->add_option("--scenario", eval_scenario, "scenario file (default: built-in 4v4)");
    eval->add_option("--episodes", eval_episodes, "episodes to run");
    eval->add_option("--heatmap-out", eval_heatmap, "write the pass-score heat map here");
    eval->add_option("--out", eval_report, "write the aggregate report here");

    auto* bench = app.add_subcommand("bench", "feasible-set construction benchmark");
    std::string bench_scene, bench_out;
    int bench_frames = 10;
    std::vector<int> bench_workers;
    bench->add_option("--scene", bench_scene, "scenario file")->required();
    bench->add_option("--frames", bench_frames, "frames per configuration");
    bench->add_option("--workers-list", bench_workers, "worker counts to compare");
    bench->add_option("--out", bench_out, "write the benchmark table here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Config config;
        if (!config_path.empty()) config = Config::load(config_path);
        if (seed_opt->count() > 0) config.seed = seed;
        if (workers_opt->count() > 0) config.workers = workers;
        config.finalize();

        if (heatmap->parsed())
            return cmd_heatmap(config, hm_scene,
                               hm_speed >= 0.0 ? std::optional<double>(hm_speed) : std::nullopt,
                               hm_nx, hm_ny, hm_out);
        if (plan->parsed()) return cmd_plan(config, plan_scene, plan_weights, plan_out);
        if (train->parsed())
            return cmd_train(config, train_mode, train_log, train_scenario, train_episodes,
                             train_weights_out, train_report_out, train_log_out, train_init);
        if (eval->parsed())
            return cmd_eval(config, eval_weights, eval_scenario, eval_episodes, eval_heatmap,
                            eval_report);
        if (bench->parsed())
            return cmd_bench(config, bench_scene, bench_frames, bench_workers, bench_out);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    }
}
