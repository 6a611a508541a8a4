#include "gkbo/transitions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace gkbo {

namespace {

std::vector<double> energies(const Swarm& swarm, const Objective& objective)
{
    std::vector<double> e(swarm.size());
    for (std::size_t i = 0; i < swarm.size(); ++i) e[i] = objective.evaluate(swarm[i].position);
    return e;
}

// Indices ranked best-first: by weight (distance-in-energy to the argmin),
// ties broken by lower energy, then lower index.
std::vector<std::size_t> rank_by_weight(const std::vector<double>& e)
{
    const double emin = *std::min_element(e.begin(), e.end());
    std::vector<std::size_t> order(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double da = std::abs(e[a] - emin), db = std::abs(e[b] - emin);
        if (da != db) return da < db;
        return e[a] < e[b];
    });
    return order;
}

void set_labels(Swarm& swarm, const std::vector<bool>& leader, bool damped, double epsilon,
                RngStream& rng)
{
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        const Label want = leader[i] ? Label::Leader : Label::Follower;
        if (swarm[i].label == want) continue;
        if (damped && rng.uniform() >= epsilon) continue;
        swarm[i].label = want;
    }
}

} // namespace

std::pair<double, double> stationary_masses(double pi_fl, double pi_lf)
{
    if (pi_fl < 0.0 || pi_lf < 0.0) throw std::invalid_argument("transition rates must be >= 0");
    const double total = pi_fl + pi_lf;
    if (total <= 0.0)
        throw std::invalid_argument("stationary_masses: both rates zero, equilibrium undefined");
    return {pi_lf / total, pi_fl / total};
}

double agent_weight(const Swarm& swarm, const Objective& objective, std::size_t i)
{
    if (swarm.empty()) throw std::invalid_argument("agent_weight: empty swarm");
    const auto e = energies(swarm, objective);
    const double emin = *std::min_element(e.begin(), e.end());
    const double di = std::abs(e[i] - emin);
    std::size_t closer = 0;
    for (double ej : e)
        if (std::abs(ej - emin) < di) ++closer;
    return static_cast<double>(closer) / static_cast<double>(swarm.size());
}

std::size_t target_leader_count(double rho1_target, std::size_t n)
{
    if (rho1_target <= 0.0 || n == 0) return 0;
    const auto count = static_cast<std::size_t>(rho1_target * static_cast<double>(n));
    return std::max<std::size_t>(count, 1);
}

void apply_transition(Swarm& swarm, const Objective& objective, const TransitionPolicy& policy,
                      double epsilon, RngStream& rng)
{
    using Kind = TransitionPolicy::Kind;

    if (policy.kind == Kind::Random || policy.kind == Kind::Mixed) {
        if (epsilon * std::max(policy.pi_fl, policy.pi_lf) > 1.0)
            throw std::invalid_argument("apply_transition: epsilon*rate > 1 is not a probability");
    }

    switch (policy.kind) {
    case Kind::Random: {
        const double p_l = epsilon * policy.pi_fl;
        const double p_f = epsilon * policy.pi_lf;
        for (auto& p : swarm.particles) {
            const double u = rng.uniform();
            if (p.label == Label::Follower) {
                if (u < p_l) p.label = Label::Leader;
            } else {
                if (u < p_f) p.label = Label::Follower;
            }
        }
        break;
    }
    case Kind::Weighted: {
        const auto e = energies(swarm, objective);
        const auto order = rank_by_weight(e);
        const std::size_t nl = target_leader_count(policy.rho1_target, swarm.size());
        std::vector<bool> leader(swarm.size(), false);
        for (std::size_t r = 0; r < nl && r < order.size(); ++r) leader[order[r]] = true;
        set_labels(swarm, leader, policy.weighted_damped, epsilon, rng);
        break;
    }
    case Kind::Mixed: {
        // With probability p_bar the step relabels by fitness rank (the weighted
        // rule); otherwise labels flip by the random rates. A per-agent or
        // per-slot blend breaks label persistence and collapses the swarm onto
        // the consensus point; this formulation keeps convergence strictly
        // between the random and weighted strategies.
        if (rng.uniform() < policy.p_bar) {
            const auto e = energies(swarm, objective);
            const auto order = rank_by_weight(e);
            const std::size_t nl = target_leader_count(policy.rho1_target, swarm.size());
            std::vector<bool> leader(swarm.size(), false);
            for (std::size_t r = 0; r < nl && r < order.size(); ++r) leader[order[r]] = true;
            set_labels(swarm, leader, policy.weighted_damped, epsilon, rng);
        } else {
            const double p_l = epsilon * policy.pi_fl;
            const double p_f = epsilon * policy.pi_lf;
            for (auto& p : swarm.particles) {
                const double u = rng.uniform();
                if (p.label == Label::Follower) {
                    if (u < p_l) p.label = Label::Leader;
                } else {
                    if (u < p_f) p.label = Label::Follower;
                }
            }
        }
        break;
    }
    }
}

} // namespace gkbo
