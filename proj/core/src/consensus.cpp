#include "gkbo/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gkbo {

std::vector<double> weighted_mean(const Swarm& swarm, const Objective& objective, double alpha,
                                  ConsensusSelector selector)
{
    std::vector<std::size_t> idx;
    if (selector == ConsensusSelector::All) {
        idx.resize(swarm.size());
        for (std::size_t i = 0; i < swarm.size(); ++i) idx[i] = i;
    } else {
        idx = swarm.indices(selector == ConsensusSelector::FollowersOnly ? Label::Follower
                                                                         : Label::Leader);
    }
    if (idx.empty()) throw EstimatorUndefined("weighted_mean: selected subset is empty");

    std::vector<double> energy(idx.size());
    double emin = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < idx.size(); ++j) {
        energy[j] = objective.evaluate(swarm[idx[j]].position);
        emin = std::min(emin, energy[j]);
    }

    const std::size_t d = swarm[idx[0]].position.size();
    std::vector<double> num(d, 0.0);
    double den = 0.0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
        const double w = std::exp(-alpha * (energy[j] - emin));
        const auto& x = swarm[idx[j]].position;
        for (std::size_t k = 0; k < d; ++k) num[k] += w * x[k];
        den += w;
    }
    // den >= 1 always: the minimal-energy particle contributes weight 1.
    for (double& v : num) v /= den;
    return num;
}

std::vector<double> consensus_point(const Swarm& swarm, const Objective& objective, double alpha,
                                    ConsensusSelector selector)
{
    if (selector != ConsensusSelector::All) {
        const Label want =
            selector == ConsensusSelector::FollowersOnly ? Label::Follower : Label::Leader;
        if (swarm.count(want) == 0)
            return weighted_mean(swarm, objective, alpha, ConsensusSelector::All);
    }
    return weighted_mean(swarm, objective, alpha, selector);
}

} // namespace gkbo
