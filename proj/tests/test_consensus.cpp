#include "doctest.h"

#include "gkbo/consensus.hpp"
#include "gkbo/rng.hpp"

#include <algorithm>
#include <cmath>

using namespace gkbo;

namespace {

Swarm two_points(const std::vector<double>& a, const std::vector<double>& b)
{
    Swarm s;
    s.particles.push_back({a, Label::Follower});
    s.particles.push_back({b, Label::Follower});
    return s;
}

} // namespace

TEST_CASE("single particle is its own consensus")
{
    auto f = make_objective("rastrigin", 3);
    Swarm s;
    s.particles.push_back({{0.5, -1.0, 2.0}, Label::Follower});
    auto x = weighted_mean(s, f, 123.0, ConsensusSelector::All);
    CHECK(x == s[0].position);
}

TEST_CASE("alpha = 0 gives the plain mean")
{
    auto f = make_objective("rastrigin", 2);
    auto s = two_points({0.0, 0.0}, {2.0, -4.0});
    auto x = weighted_mean(s, f, 0.0, ConsensusSelector::All);
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(x[1] == doctest::Approx(-2.0).epsilon(1e-14));
}

TEST_CASE("equal energies weight equally regardless of alpha")
{
    auto f = make_objective("rastrigin", 2);
    // Rastrigin is symmetric around the minimizer at (1,1).
    auto s = two_points({0.5, 1.0}, {1.5, 1.0});
    auto x = weighted_mean(s, f, 5e6, ConsensusSelector::All);
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("large alpha picks the argmin particle")
{
    auto f = make_objective("rastrigin", 5);
    RngStream rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Swarm s;
        std::size_t best = 0;
        double ebest = 0.0;
        for (int i = 0; i < 50; ++i) {
            Particle p;
            p.position.resize(5);
            for (auto& v : p.position) v = rng.uniform(-4.12, 0.0);
            const double e = f.evaluate(p.position);
            if (i == 0 || e < ebest) {
                ebest = e;
                best = static_cast<std::size_t>(i);
            }
            s.particles.push_back(std::move(p));
        }
        auto x = weighted_mean(s, f, 5e6, ConsensusSelector::All);
        for (int k = 0; k < 5; ++k)
            CHECK(std::abs(x[static_cast<std::size_t>(k)] -
                           s[best].position[static_cast<std::size_t>(k)]) < 1e-8);
    }
}

TEST_CASE("consensus lies in the coordinate-wise convex hull")
{
    auto f = make_objective("ackley", 3);
    RngStream rng(11);
    Swarm s;
    for (int i = 0; i < 20; ++i) {
        Particle p;
        p.position.resize(3);
        for (auto& v : p.position) v = rng.uniform(-30.0, 0.0);
        s.particles.push_back(std::move(p));
    }
    for (double alpha : {0.0, 0.1, 1.0, 100.0, 1e6}) {
        auto x = weighted_mean(s, f, alpha, ConsensusSelector::All);
        for (std::size_t k = 0; k < 3; ++k) {
            double lo = 1e300, hi = -1e300;
            for (const auto& p : s.particles) {
                lo = std::min(lo, p.position[k]);
                hi = std::max(hi, p.position[k]);
            }
            CHECK(x[k] >= lo - 1e-12);
            CHECK(x[k] <= hi + 1e-12);
        }
    }
}

TEST_CASE("selector restricts to the labeled subset")
{
    auto f = make_objective("rastrigin", 1);
    Swarm s;
    s.particles.push_back({{-3.0}, Label::Follower});
    s.particles.push_back({{0.5}, Label::Leader});
    auto xl = weighted_mean(s, f, 0.0, ConsensusSelector::LeadersOnly);
    CHECK(xl[0] == doctest::Approx(0.5));
    auto xf = weighted_mean(s, f, 0.0, ConsensusSelector::FollowersOnly);
    CHECK(xf[0] == doctest::Approx(-3.0));
}

TEST_CASE("empty subset: weighted_mean throws, consensus_point falls back")
{
    auto f = make_objective("rastrigin", 1);
    Swarm s;
    s.particles.push_back({{-3.0}, Label::Follower});
    CHECK_THROWS_AS(weighted_mean(s, f, 1.0, ConsensusSelector::LeadersOnly), EstimatorUndefined);
    auto x = consensus_point(s, f, 1.0, ConsensusSelector::LeadersOnly);
    CHECK(x[0] == doctest::Approx(-3.0));
    Swarm empty;
    CHECK_THROWS_AS(weighted_mean(empty, f, 1.0, ConsensusSelector::All), EstimatorUndefined);
}

TEST_CASE("no overflow at extreme alpha and energy spread")
{
    auto f = make_objective("rosenbrock", 2);
    auto s = two_points({-2.0, -2.0}, {1.0, 1.0});
    auto x = weighted_mean(s, f, 1e12, ConsensusSelector::All);
    CHECK(std::isfinite(x[0]));
    CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-10));
}
