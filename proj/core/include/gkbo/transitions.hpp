#pragma once

#include <utility>
#include <vector>

#include "gkbo/objective.hpp"
#include "gkbo/rng.hpp"
#include "gkbo/swarm.hpp"

namespace gkbo {

struct TransitionPolicy {
    enum class Kind { Random, Weighted, Mixed };
    Kind kind = Kind::Random;
    double pi_fl = 0.2;        // follower -> leader rate (Random, Mixed)
    double pi_lf = 0.2;        // leader -> follower rate (Random, Mixed)
    double rho1_target = 0.5;  // equilibrium leader fraction (Weighted, Mixed)
    double p_bar = 0.5;        // probability a step uses the rank rule (Mixed)
    // When set, rank-selected flips are damped to probability epsilon instead
    // of being applied deterministically.
    bool weighted_damped = false;
};

// Equilibrium masses of the constant-rate label process:
// rho0 = pi_lf/(pi_lf+pi_fl), rho1 = pi_fl/(pi_lf+pi_fl).
std::pair<double, double> stationary_masses(double pi_fl, double pi_lf);

// Fraction of agents strictly closer in energy to the current best agent:
// w(x_i) = (1/N) #{ y : |E(x_min)-E(y)| < |E(x_min)-E(x_i)| }. The argmin has
// weight 0. Lies in [0, 1-1/N].
double agent_weight(const Swarm& swarm, const Objective& objective, std::size_t i);

// Relabels the swarm in place; positions are never modified.
void apply_transition(Swarm& swarm, const Objective& objective, const TransitionPolicy& policy,
                      double epsilon, RngStream& rng);

// Leader count used by rank-based strategies: floor(rho1_target*N), at least 1
// when rho1_target > 0 and the swarm is nonempty.
std::size_t target_leader_count(double rho1_target, std::size_t n);

} // namespace gkbo
