#pragma once

#include <stdexcept>
#include <vector>

#include "gkbo/objective.hpp"
#include "gkbo/swarm.hpp"

namespace gkbo {

enum class ConsensusSelector { All, FollowersOnly, LeadersOnly };

// Thrown when the selected subset is empty: the estimator is undefined and
// must never degrade to a silent zero vector.
struct EstimatorUndefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gibbs-weighted mean x^ = sum_i x_i exp(-a(E_i - E*)) / sum_i exp(-a(E_i - E*))
// over the selected subset, with E* the subset minimum (log-shift
// stabilization; exact, and overflow-free for arbitrarily large alpha).
// The reduction runs in index order, so results are reproducible.
std::vector<double> weighted_mean(const Swarm& swarm, const Objective& objective, double alpha,
                                  ConsensusSelector selector);

// Same, but falls back to the whole swarm when the selected subset is empty
// (the harness needs an estimate at t=0 when everyone is a follower).
std::vector<double> consensus_point(const Swarm& swarm, const Objective& objective, double alpha,
                                    ConsensusSelector selector);

} // namespace gkbo
