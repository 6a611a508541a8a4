#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkbo {

// Benchmark cost function E: R^d -> R with known global minimizer and the
// hypercube agents are initialized in. Immutable after construction; safe to
// evaluate from any number of threads.
struct Objective {
    std::string id;
    int dimension = 0;
    std::vector<double> global_min_location;
    double global_min_value = 0.0;
    std::vector<double> init_low;
    std::vector<double> init_high;
    std::function<double(const std::vector<double>&)> eval;

    double evaluate(const std::vector<double>& x) const
    {
        if (static_cast<int>(x.size()) != dimension)
            throw std::invalid_argument("objective '" + id + "': expected dimension " +
                                        std::to_string(dimension) + ", got " +
                                        std::to_string(x.size()));
        return eval(x);
    }
};

using ObjectiveFactory = std::function<Objective(int dimension)>;

// Registry keyed by string id. The built-in set (rastrigin, ackley, griewank,
// rosenbrock, salomon, all with minimizer at 1 and an init box that excludes
// it) is registered on first use; custom objectives can be added at runtime.
Objective make_objective(const std::string& id, int dimension);
void register_objective(const std::string& id, ObjectiveFactory factory);
std::vector<std::string> objective_ids();

} // namespace gkbo
