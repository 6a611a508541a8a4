#include "gkbo/objective.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace gkbo {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::vector<double> constant(int d, double v) { return std::vector<double>(d, v); }

// All built-ins are translated so the global minimizer sits at x = 1, and the
// init box lies strictly below it.

Objective make_rastrigin(int d)
{
    Objective o;
    o.id = "rastrigin";
    o.dimension = d;
    o.global_min_location = constant(d, 1.0);
    o.global_min_value = 0.0;
    o.init_low = constant(d, -4.12);
    o.init_high = constant(d, 0.0);
    o.eval = [](const std::vector<double>& x) {
        double s = 0.0;
        for (double xi : x) {
            const double z = xi - 1.0;
            s += z * z - 10.0 * std::cos(two_pi * z) + 10.0;
        }
        return s;
    };
    return o;
}

Objective make_ackley(int d)
{
    Objective o;
    o.id = "ackley";
    o.dimension = d;
    o.global_min_location = constant(d, 1.0);
    o.global_min_value = 0.0;
    o.init_low = constant(d, -30.0);
    o.init_high = constant(d, 0.0);
    o.eval = [d](const std::vector<double>& x) {
        double sq = 0.0, cs = 0.0;
        for (double xi : x) {
            const double z = xi - 1.0;
            sq += z * z;
            cs += std::cos(two_pi * z);
        }
        const double n = static_cast<double>(d);
        return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 +
               std::numbers::e;
    };
    return o;
}

Objective make_griewank(int d)
{
    Objective o;
    o.id = "griewank";
    o.dimension = d;
    o.global_min_location = constant(d, 1.0);
    o.global_min_value = 0.0;
    o.init_low = constant(d, -10.0);
    o.init_high = constant(d, 0.0);
    o.eval = [](const std::vector<double>& x) {
        double s = 0.0, p = 1.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double z = x[i] - 1.0;
            s += z * z / 4000.0;
            p *= std::cos(z / std::sqrt(static_cast<double>(i + 1)));
        }
        return s - p + 1.0;
    };
    return o;
}

// Rosenbrock's minimizer is already at 1; no translation needed.
Objective make_rosenbrock(int d)
{
    Objective o;
    o.id = "rosenbrock";
    o.dimension = d;
    o.global_min_location = constant(d, 1.0);
    o.global_min_value = 0.0;
    o.init_low = constant(d, -2.048);
    o.init_high = constant(d, 0.0);
    o.eval = [](const std::vector<double>& x) {
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            const double a = x[i + 1] - x[i] * x[i];
            const double b = 1.0 - x[i];
            s += 100.0 * a * a + b * b;
        }
        return s;
    };
    return o;
}

Objective make_salomon(int d)
{
    Objective o;
    o.id = "salomon";
    o.dimension = d;
    o.global_min_location = constant(d, 1.0);
    o.global_min_value = 0.0;
    o.init_low = constant(d, -4.0);
    o.init_high = constant(d, 0.0);
    o.eval = [](const std::vector<double>& x) {
        double sq = 0.0;
        for (double xi : x) {
            const double z = xi - 1.0;
            sq += z * z;
        }
        const double r = std::sqrt(sq);
        return 1.0 - std::cos(two_pi * r) + 0.1 * r;
    };
    return o;
}

std::map<std::string, ObjectiveFactory>& registry()
{
    static std::map<std::string, ObjectiveFactory> reg = {
        {"rastrigin", make_rastrigin}, {"ackley", make_ackley},
        {"griewank", make_griewank},   {"rosenbrock", make_rosenbrock},
        {"salomon", make_salomon},
    };
    return reg;
}

std::mutex& registry_mutex()
{
    static std::mutex m;
    return m;
}

} // namespace

Objective make_objective(const std::string& id, int dimension)
{
    if (dimension < 1) throw std::invalid_argument("objective dimension must be >= 1");
    std::lock_guard lock(registry_mutex());
    auto it = registry().find(id);
    if (it == registry().end()) throw std::invalid_argument("unknown objective id '" + id + "'");
    return it->second(dimension);
}

void register_objective(const std::string& id, ObjectiveFactory factory)
{
    std::lock_guard lock(registry_mutex());
    registry()[id] = std::move(factory);
}

std::vector<std::string> objective_ids()
{
    std::lock_guard lock(registry_mutex());
    std::vector<std::string> ids;
    for (const auto& [id, fn] : registry()) ids.push_back(id);
    return ids;
}

} // namespace gkbo
