#include "gkbo/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iostream>
#include <stdexcept>
#include <thread>

namespace gkbo {

namespace {

constexpr double guard_box = 1e8;

// The heavy-tailed multiplicative noise sends individual coordinates on large
// excursions that return on their own; a run is only broken once values stop
// being finite or the estimate itself diverges.
bool positions_finite(const Swarm& swarm)
{
    for (const auto& p : swarm.particles)
        for (double x : p.position)
            if (!std::isfinite(x)) return false;
    return true;
}

bool estimate_bounded(const std::vector<double>& xhat)
{
    for (double x : xhat)
        if (!std::isfinite(x) || std::abs(x) > guard_box) return false;
    return true;
}

Swarm init_swarm(const Objective& obj, const RunConfig& cfg, RngStream& rng)
{
    Swarm swarm;
    swarm.particles.resize(static_cast<std::size_t>(cfg.n_particles));
    const int d = cfg.dimension;
    for (auto& p : swarm.particles) {
        p.position.resize(static_cast<std::size_t>(d));
        p.label = Label::Follower; // everyone starts as a follower
        for (int j = 0; j < d; ++j) {
            const double lo = obj.init_low[static_cast<std::size_t>(j)];
            const double hi = obj.init_high[static_cast<std::size_t>(j)];
            if (cfg.init == RunConfig::Init::UniformBox) {
                p.position[static_cast<std::size_t>(j)] = rng.uniform(lo, hi);
            } else {
                const double mean = 0.5 * (lo + hi);
                const double sd = (hi - lo) / 4.0;
                p.position[static_cast<std::size_t>(j)] = mean + sd * rng.normal();
            }
        }
    }
    return swarm;
}

double inf_norm_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double m = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
    return m;
}

} // namespace

void RunConfig::validate() const
{
    if (n_particles < 2) throw std::invalid_argument("n_particles must be >= 2");
    if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
    if (j_stall < 1) throw std::invalid_argument("j_stall must be >= 1");
    if (delta_stall <= 0.0) throw std::invalid_argument("delta_stall must be > 0");
    if (success_tol <= 0.0) throw std::invalid_argument("success_tol must be > 0");
    if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
    if (dynamics.epsilon <= 0.0 || dynamics.epsilon > 1.0)
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    if (dynamics.alpha < 0.0) throw std::invalid_argument("alpha must be >= 0");
    if (dynamics.nu_f <= 0.0 || dynamics.nu_l <= 0.0)
        throw std::invalid_argument("nu_f and nu_l must be > 0");
    if (dynamics.sigma_f < 0.0) throw std::invalid_argument("sigma_f must be >= 0");
    if (dynamics.interaction_prob <= 0.0 || dynamics.interaction_prob > 1.0)
        throw std::invalid_argument("interaction_prob must lie in (0, 1]");
    if (transition.kind != TransitionPolicy::Kind::Weighted) {
        if (dynamics.epsilon * std::max(transition.pi_fl, transition.pi_lf) > 1.0)
            throw std::invalid_argument("epsilon*transition rate exceeds 1");
        if (transition.pi_fl < 0.0 || transition.pi_lf < 0.0)
            throw std::invalid_argument("transition rates must be >= 0");
    }
    if (transition.kind != TransitionPolicy::Kind::Random) {
        if (transition.rho1_target <= 0.0 || transition.rho1_target >= 1.0)
            throw std::invalid_argument("rho1_target must lie in (0, 1)");
    }
    if (transition.p_bar < 0.0 || transition.p_bar > 1.0)
        throw std::invalid_argument("p_bar must lie in [0, 1]");
    if (dynamics.nu_l * dynamics.epsilon > 1.0 && dynamics.method == Method::GKBO)
        std::clog << "warning: nu_l*epsilon = " << dynamics.nu_l * dynamics.epsilon
                  << " > 1, leaders overshoot the consensus point\n";
}

RunResult run_single(const RunConfig& cfg)
{
    cfg.validate();
    const auto t_start = std::chrono::steady_clock::now();

    const Objective obj = make_objective(cfg.objective_id, cfg.dimension);
    RngStream rng(cfg.seed);
    Swarm swarm = init_swarm(obj, cfg, rng);

    RunResult res;
    res.seed = cfg.seed;

    std::vector<double> xhat =
        consensus_point(swarm, obj, cfg.dynamics.alpha, cfg.dynamics.consensus);
    bool fallback_logged = false;

    int n = 0, j = 0;
    while (n < cfg.max_iterations && j < cfg.j_stall) {
        const StepInfo info = step(swarm, obj, cfg.dynamics, rng);
        if (info.leaders_missing && !fallback_logged) {
            std::clog << "run seed=" << cfg.seed
                      << ": empty leader set, followers took the diffusion-only branch\n";
            fallback_logged = true;
        }
        apply_transition(swarm, obj, cfg.transition, cfg.dynamics.epsilon, rng);

        if (!positions_finite(swarm)) {
            res.aborted = true;
            ++n;
            break;
        }
        const std::vector<double> xhat_next =
            consensus_point(swarm, obj, cfg.dynamics.alpha, cfg.dynamics.consensus);
        if (!estimate_bounded(xhat_next)) {
            res.aborted = true;
            ++n;
            break;
        }
        if (inf_norm_diff(xhat_next, xhat) <= cfg.delta_stall)
            ++j;
        else if (cfg.stall_reset)
            j = 0;
        xhat = xhat_next;
        ++n;

        if (cfg.trace_every > 0 && n % cfg.trace_every == 0)
            res.trace.push_back(snapshot(swarm, obj, cfg.dynamics.alpha, cfg.dynamics.consensus,
                                         n * cfg.dynamics.epsilon));
    }

    res.iterations_used = n;
    res.stalled = (j >= cfg.j_stall);
    res.final_xhat = xhat;
    res.final_accuracy = inf_norm_diff(xhat, obj.global_min_location);
    res.success = !res.aborted && is_success(res.final_accuracy, cfg.success_tol);
    res.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start)
            .count();
    return res;
}

ExperimentReport run_experiment(const RunConfig& cfg, int m_runs, std::uint64_t base_seed,
                                int threads, std::size_t grid_index)
{
    if (m_runs < 1) throw std::invalid_argument("run_experiment: M must be >= 1");
    cfg.validate();

    std::vector<RunResult> results(static_cast<std::size_t>(m_runs));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= m_runs) return;
            RunConfig run_cfg = cfg;
            run_cfg.seed = derive_seed(base_seed, grid_index, static_cast<std::uint64_t>(i));
            results[static_cast<std::size_t>(i)] = run_single(run_cfg);
        }
    };

    const int n_workers = std::max(1, std::min(threads, m_runs));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ExperimentReport rep;
    rep.grid_index = grid_index;
    rep.config = cfg;
    rep.n_runs = m_runs;
    int successes = 0;
    long long iter_sum = 0;
    rep.iter_min = results[0].iterations_used;
    rep.iter_max = results[0].iterations_used;
    for (const auto& r : results) {
        successes += r.success ? 1 : 0;
        iter_sum += r.iterations_used;
        rep.iter_min = std::min(rep.iter_min, r.iterations_used);
        rep.iter_max = std::max(rep.iter_max, r.iterations_used);
    }
    rep.success_rate = static_cast<double>(successes) / static_cast<double>(m_runs);
    rep.iter_mean = static_cast<double>(iter_sum) / static_cast<double>(m_runs);
    rep.runs = std::move(results);
    return rep;
}

} // namespace gkbo
