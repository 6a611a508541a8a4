#include "doctest.h"

#include "gkbo/diagnostics.hpp"

#include <cmath>

using namespace gkbo;

TEST_CASE("snapshot moments on a two-follower swarm")
{
    auto f = make_objective("rastrigin", 1);
    Swarm s;
    s.particles.push_back({{0.0}, Label::Follower});
    s.particles.push_back({{2.0}, Label::Follower});
    auto m = snapshot(s, f, 0.0, ConsensusSelector::All, 3.0);
    CHECK(m.t == 3.0);
    CHECK(m.rho0 == doctest::Approx(1.0));
    CHECK(m.rho1 == doctest::Approx(0.0));
    REQUIRE(m.M0.has_value());
    CHECK_FALSE(m.M1.has_value());
    CHECK((*m.M0)[0] == doctest::Approx(1.0));
    // v0 = (1/N) sum (x - M0)^2 = (1 + 1)/2 = 1
    CHECK(m.v0 == doctest::Approx(1.0));
    CHECK(m.v1 == doctest::Approx(0.0));
    CHECK(m.V == doctest::Approx(1.0));
}

TEST_CASE("mean gap between the label populations")
{
    auto f = make_objective("rastrigin", 1);
    Swarm s;
    s.particles.push_back({{0.0}, Label::Follower});
    s.particles.push_back({{4.0}, Label::Leader});
    auto m = snapshot(s, f, 0.0, ConsensusSelector::All, 0.0);
    auto gap = mean_gap_squared(m);
    REQUIRE(gap.has_value());
    CHECK(*gap == doctest::Approx(16.0));

    Swarm only;
    only.particles.push_back({{1.0}, Label::Follower});
    auto m2 = snapshot(only, f, 0.0, ConsensusSelector::All, 0.0);
    CHECK_FALSE(mean_gap_squared(m2).has_value());
}

TEST_CASE("accuracy is the sup distance to the global minimizer")
{
    auto f = make_objective("rastrigin", 2);
    Swarm s;
    s.particles.push_back({{1.5, 0.8}, Label::Follower});
    auto m = snapshot(s, f, 5e6, ConsensusSelector::All, 0.0);
    CHECK(m.accuracy == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("exact exponential series recovers its rate")
{
    std::vector<std::pair<double, double>> series;
    for (int t = 0; t < 40; ++t)
        series.emplace_back(static_cast<double>(t), 3.0 * std::exp(-2.0 * t));
    auto fit = fit_decay_rate(series);
    CHECK(fit.rate == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("constant series has rate zero")
{
    std::vector<std::pair<double, double>> series;
    for (int t = 0; t < 20; ++t) series.emplace_back(static_cast<double>(t), 5.0);
    auto fit = fit_decay_rate(series);
    CHECK(fit.rate == doctest::Approx(0.0));
}

TEST_CASE("fit rejects short or nonpositive series")
{
    std::vector<std::pair<double, double>> tiny = {{0.0, 1.0}, {1.0, 0.5}};
    CHECK_THROWS_AS(fit_decay_rate(tiny), std::invalid_argument);
    std::vector<std::pair<double, double>> bad;
    for (int t = 0; t < 12; ++t) bad.emplace_back(static_cast<double>(t), t == 5 ? -1.0 : 1.0);
    CHECK_THROWS_AS(fit_decay_rate(bad), std::invalid_argument);
}

TEST_CASE("V differs from the pooled variance on a two-cluster swarm")
{
    // v0 + v1 measures spread around per-label means; a swarm split into two
    // tight clusters has small V but large pooled variance.
    auto f = make_objective("rastrigin", 1);
    Swarm s;
    for (int i = 0; i < 10; ++i) s.particles.push_back({{0.0}, Label::Follower});
    for (int i = 0; i < 10; ++i) s.particles.push_back({{10.0}, Label::Leader});
    auto m = snapshot(s, f, 0.0, ConsensusSelector::All, 0.0);
    CHECK(m.V == doctest::Approx(0.0));
    REQUIRE(mean_gap_squared(m).has_value());
    CHECK(*mean_gap_squared(m) == doctest::Approx(100.0));
}
