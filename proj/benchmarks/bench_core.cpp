#include <benchmark/benchmark.h>

#include "gkbo/dynamics.hpp"
#include "gkbo/transitions.hpp"

using namespace gkbo;

namespace {

Swarm make_swarm(int n, int d, std::uint64_t seed)
{
    RngStream rng(seed);
    Swarm s;
    for (int i = 0; i < n; ++i) {
        Particle p;
        p.position.resize(static_cast<std::size_t>(d));
        for (auto& v : p.position) v = rng.uniform(-4.12, 0.0);
        p.label = i % 2 ? Label::Leader : Label::Follower;
        s.particles.push_back(std::move(p));
    }
    return s;
}

void bm_weighted_mean(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto f = make_objective("rastrigin", 20);
    auto s = make_swarm(n, 20, 1);
    for (auto _ : state) {
        auto x = weighted_mean(s, f, 5e6, ConsensusSelector::All);
        benchmark::DoNotOptimize(x);
    }
}

void bm_gkbo_step(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto f = make_objective("rastrigin", 20);
    auto s = make_swarm(n, 20, 2);
    DynamicsConfig cfg;
    RngStream rng(3);
    for (auto _ : state) {
        gkbo_step(s, f, cfg, rng);
        benchmark::ClobberMemory();
    }
}

void bm_weighted_transition(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    auto f = make_objective("rastrigin", 20);
    auto s = make_swarm(n, 20, 4);
    TransitionPolicy pol;
    pol.kind = TransitionPolicy::Kind::Weighted;
    RngStream rng(5);
    for (auto _ : state) {
        apply_transition(s, f, pol, 0.1, rng);
        benchmark::ClobberMemory();
    }
}

BENCHMARK(bm_weighted_mean)->Arg(200)->Arg(2000);
BENCHMARK(bm_gkbo_step)->Arg(200)->Arg(2000);
BENCHMARK(bm_weighted_transition)->Arg(200)->Arg(2000);

} // namespace

BENCHMARK_MAIN();
