#pragma once

#include <vector>

#include "gkbo/consensus.hpp"
#include "gkbo/objective.hpp"
#include "gkbo/rng.hpp"
#include "gkbo/swarm.hpp"

namespace gkbo {

enum class Method { GKBO, KBO, GA, GAModified };
enum class Diffusion { Isotropic, Anisotropic };

struct DynamicsConfig {
    Method method = Method::GKBO;
    double nu_f = 1.0;
    double nu_l = 10.0;
    double sigma_f = 4.0;
    double alpha = 5e6;
    double epsilon = 0.1;
    Diffusion diffusion = Diffusion::Anisotropic;
    ConsensusSelector consensus = ConsensusSelector::All;
    // Probability that an agent interacts at all during a step; 1 means every
    // agent interacts every step.
    double interaction_prob = 1.0;
};

// Isotropic: |x^ - x|_2 * xi.  Anisotropic: componentwise (x^ - x)_j * xi_j.
std::vector<double> diffusion_action(Diffusion kind, const std::vector<double>& xhat,
                                     const std::vector<double>& x, const std::vector<double>& xi);

struct StepInfo {
    bool leaders_missing = false; // followers fell back to diffusion-only / mutation-only
};

// One discrete time step of each method, in place. The consensus point is
// computed once at step start from the pre-step swarm. Labels and population
// size are never modified here.
StepInfo gkbo_step(Swarm& swarm, const Objective& objective, const DynamicsConfig& cfg,
                   RngStream& rng);
StepInfo kbo_step(Swarm& swarm, const Objective& objective, const DynamicsConfig& cfg,
                  RngStream& rng);
StepInfo ga_step(Swarm& swarm, const Objective& objective, const DynamicsConfig& cfg,
                 RngStream& rng, bool modified);

// Dispatch on cfg.method.
StepInfo step(Swarm& swarm, const Objective& objective, const DynamicsConfig& cfg, RngStream& rng);

} // namespace gkbo
