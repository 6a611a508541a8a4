#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gkbo/diagnostics.hpp"
#include "gkbo/dynamics.hpp"
#include "gkbo/transitions.hpp"

namespace gkbo {

struct RunConfig {
    DynamicsConfig dynamics;
    TransitionPolicy transition;
    std::string objective_id = "rastrigin";
    int dimension = 20;
    int n_particles = 200;
    int max_iterations = 10000;
    int j_stall = 1000;
    double delta_stall = 1e-4;
    double success_tol = 0.25;
    enum class Init { UniformBox, GaussianBox };
    Init init = Init::UniformBox;
    // Count stalled iterations consecutively (counter resets whenever the
    // consensus point moves) instead of cumulatively over the whole run.
    bool stall_reset = false;
    std::uint64_t seed = 0;
    int trace_every = 0; // 0 disables trace recording

    void validate() const; // throws std::invalid_argument on bad settings
};

struct RunResult {
    int iterations_used = 0;
    bool stalled = false;
    bool aborted = false; // position left the +-1e8 guard box
    std::vector<double> final_xhat;
    double final_accuracy = 0.0;
    bool success = false;
    std::vector<MomentSnapshot> trace;
    double wall_time_ms = 0.0;
    std::uint64_t seed = 0;
};

struct ExperimentReport {
    std::size_t grid_index = 0;
    std::vector<std::pair<std::string, std::string>> grid_point; // swept key -> value
    RunConfig config;
    int n_runs = 0;
    double success_rate = 0.0;
    double iter_mean = 0.0;
    int iter_min = 0;
    int iter_max = 0;
    std::vector<RunResult> runs;
};

inline bool is_success(double accuracy, double tol) { return accuracy <= tol; }

RunResult run_single(const RunConfig& cfg);

// M independent runs with seeds derive_seed(base_seed, grid_index, 0..M-1),
// scheduled over up to `threads` workers. Aggregation order is fixed, so
// reports are identical for any worker count.
ExperimentReport run_experiment(const RunConfig& cfg, int m_runs, std::uint64_t base_seed,
                                int threads = 1, std::size_t grid_index = 0);

struct SweepAxis {
    std::string key; // config key, e.g. "sigma_f" or "dimension"
    std::vector<std::string> values;
};

std::vector<ExperimentReport> sweep(const RunConfig& base, const std::vector<SweepAxis>& axes,
                                    int m_runs, std::uint64_t base_seed, int threads = 1);

struct EmitOptions {
    bool plots = true;
    // Measured wall time is the only nondeterministic column; it is written
    // only on request so default reports are byte-reproducible.
    bool timing = false;
};

// Writes runs.csv, summary.csv, per-run trace files when traces were
// recorded, and plot files (SVG + plain-text data) for 1- and 2-axis sweeps.
void emit_report(const std::vector<ExperimentReport>& reports, const std::string& out_dir,
                 const EmitOptions& opts = {});

// Re-renders the plot files from an existing summary.csv in `out_dir`.
void plot_from_summary(const std::string& out_dir);

// Enum <-> string names shared by the config parser and the CSV writers.
std::string to_string(Method m);
std::string to_string(Diffusion d);
std::string to_string(ConsensusSelector s);
std::string to_string(TransitionPolicy::Kind k);
std::string to_string(RunConfig::Init i);

} // namespace gkbo
