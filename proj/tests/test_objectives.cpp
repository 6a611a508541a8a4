#include "doctest.h"

#include "gkbo/objective.hpp"

#include <algorithm>
#include <cmath>

using namespace gkbo;

TEST_CASE("rastrigin hand values")
{
    auto f = make_objective("rastrigin", 20);
    // At the origin every coordinate contributes (x-1)^2 - 10cos(2pi(x-1)) + 10
    // with x=0: 1 - 10cos(-2pi) + 10 = 1.
    std::vector<double> zero(20, 0.0);
    CHECK(f.evaluate(zero) == doctest::Approx(20.0).epsilon(1e-12));

    auto g = make_objective("rastrigin", 3);
    // (1,1,2): two coordinates at the minimizer contribute 0, the third
    // contributes 1 - 10cos(2pi) + 10 = 1.
    CHECK(g.evaluate({1.0, 1.0, 2.0}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("global minimum location and value")
{
    for (const auto& id : objective_ids()) {
        auto f = make_objective(id, 5);
        CAPTURE(id);
        REQUIRE(static_cast<int>(f.global_min_location.size()) == 5);
        CHECK(f.evaluate(f.global_min_location) == doctest::Approx(f.global_min_value).epsilon(1e-10));
        // Nearby points are not better.
        for (int k = 0; k < 5; ++k) {
            auto x = f.global_min_location;
            x[k] += 0.01;
            CHECK(f.evaluate(x) >= f.global_min_value - 1e-12);
        }
    }
}

TEST_CASE("init box excludes the minimizer")
{
    for (const auto& id : objective_ids()) {
        auto f = make_objective(id, 4);
        CAPTURE(id);
        bool inside = true;
        for (int k = 0; k < 4; ++k) {
            const double m = f.global_min_location[static_cast<std::size_t>(k)];
            if (m < f.init_low[static_cast<std::size_t>(k)] ||
                m > f.init_high[static_cast<std::size_t>(k)])
                inside = false;
        }
        CHECK_FALSE(inside);
    }
}

TEST_CASE("dimension mismatch throws")
{
    auto f = make_objective("ackley", 3);
    CHECK_THROWS_AS(f.evaluate({1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_objective("no-such-objective", 3), std::invalid_argument);
}

TEST_CASE("custom registration")
{
    register_objective("sphere-test", [](int d) {
        Objective o;
        o.id = "sphere-test";
        o.dimension = d;
        o.global_min_location.assign(static_cast<std::size_t>(d), 0.0);
        o.init_low.assign(static_cast<std::size_t>(d), -1.0);
        o.init_high.assign(static_cast<std::size_t>(d), 1.0);
        o.eval = [](const std::vector<double>& x) {
            double s = 0;
            for (double v : x) s += v * v;
            return s;
        };
        return o;
    });
    auto f = make_objective("sphere-test", 2);
    CHECK(f.evaluate({3.0, 4.0}) == doctest::Approx(25.0));
    auto ids = objective_ids();
    CHECK(std::find(ids.begin(), ids.end(), "sphere-test") != ids.end());
}
