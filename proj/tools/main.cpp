#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gkbo/config.hpp"
#include "gkbo/harness.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"GKBO particle-based global optimization benchmark harness"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 1;
    int trace_every = -1;
    bool timing = false;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        if (needs_config)
            sub->add_option("--config", config_path, "config file")->required();
        sub->add_option("--out", out_dir, "output directory");
        if (needs_config) {
            sub->add_option("--seed", seed, "base seed (overrides config)")
                ->each([&](const std::string&) { seed_set = true; });
            sub->add_option("--threads", threads, "concurrent runs");
            sub->add_option("--trace-every", trace_every,
                            "record a moment snapshot every n iterations");
            sub->add_flag("--timing", timing, "write measured wall times into runs.csv");
        }
    };

    auto* run_cmd = app.add_subcommand("run", "run a single experiment (M repetitions)");
    auto* sweep_cmd = app.add_subcommand("sweep", "run the config's [sweep] grid");
    auto* plot_cmd = app.add_subcommand("plot", "re-render plots from existing CSVs");
    add_common(run_cmd, true);
    add_common(sweep_cmd, true);
    add_common(plot_cmd, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (plot_cmd->parsed()) {
            gkbo::plot_from_summary(out_dir);
            return 0;
        }

        gkbo::ParsedConfig cfg = gkbo::parse_config_file(config_path);
        if (seed_set) cfg.base.seed = seed;
        if (trace_every >= 0) cfg.base.trace_every = trace_every;
        gkbo::EmitOptions opts;
        opts.timing = timing;

        std::vector<gkbo::ExperimentReport> reports;
        if (run_cmd->parsed()) {
            reports.push_back(gkbo::run_experiment(cfg.base, cfg.runs, cfg.base.seed, threads));
        } else {
            if (cfg.axes.empty()) {
                std::cerr << "sweep: config has no [sweep] section\n";
                return 1;
            }
            reports = gkbo::sweep(cfg.base, cfg.axes, cfg.runs, cfg.base.seed, threads);
        }
        gkbo::emit_report(reports, out_dir, opts);

        for (const auto& rep : reports) {
            std::cout << "experiment " << rep.grid_index;
            for (const auto& [k, v] : rep.grid_point) std::cout << ' ' << k << '=' << v;
            std::cout << ": success_rate=" << rep.success_rate << " iter_mean=" << rep.iter_mean
                      << " [" << rep.iter_min << ", " << rep.iter_max << "]\n";
        }
        std::cout << "wrote " << out_dir << "/runs.csv and " << out_dir << "/summary.csv\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
