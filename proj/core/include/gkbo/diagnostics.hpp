#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gkbo/consensus.hpp"
#include "gkbo/objective.hpp"
#include "gkbo/swarm.hpp"

namespace gkbo {

// Empirical population moments at one instant. All moments carry weight 1/N,
// so rho0+rho1 = 1 and m0+m1 is the unnormalized swarm mean.
struct MomentSnapshot {
    double t = 0.0;
    double rho0 = 0.0, rho1 = 0.0;
    std::vector<double> m0, m1;                // unnormalized first moments
    std::optional<std::vector<double>> M0, M1; // normalized means m/rho (absent if rho=0)
    double v0 = 0.0, v1 = 0.0;                 // per-label variances
    double V = 0.0;                            // v0 + v1
    std::vector<double> xhat;
    double accuracy = 0.0; // ||xhat - global minimizer||_inf
};

MomentSnapshot snapshot(const Swarm& swarm, const Objective& objective, double alpha,
                        ConsensusSelector selector, double t);

struct DecayFit {
    double rate = 0.0; // value ~ C exp(-rate*t)
    double r_squared = 0.0;
};

// Least-squares fit of log(value) against t. Requires >= 10 samples, all
// positive; the caller truncates the series at the first nonpositive entry.
DecayFit fit_decay_rate(const std::vector<std::pair<double, double>>& series);

// Squared Euclidean distance between the normalized label means, the
// (M0-M1)^2 diagnostic; absent when either label is empty.
std::optional<double> mean_gap_squared(const MomentSnapshot& s);

} // namespace gkbo
