#pragma once

#include <cstdint>
#include <random>

namespace gkbo {

// Deterministic random stream. Each run owns exactly one stream; identical
// seeds produce identical draw sequences.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return unif_(gen_); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() { return norm_(gen_); }

    // Uniform index in [0, n).
    std::size_t pick(std::size_t n)
    {
        std::uniform_int_distribution<std::size_t> d(0, n - 1);
        return d(gen_);
    }

    std::uint64_t raw() { return gen_(); }

private:
    std::mt19937_64 gen_;
    std::uniform_real_distribution<double> unif_{0.0, 1.0};
    std::normal_distribution<double> norm_{0.0, 1.0};
};

// splitmix64 finalizer, used to derive independent per-run seeds from
// (base_seed, grid_index, run_index) so adding grid points never perturbs
// existing runs.
inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t grid_index,
                                 std::uint64_t run_index)
{
    return mix64(mix64(base ^ 0x6a09e667f3bcc909ULL) + grid_index * 0x9e3779b97f4a7c15ULL +
                 run_index);
}

} // namespace gkbo
