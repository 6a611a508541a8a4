#include "gkbo/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gkbo {

namespace {

void check_dims(std::size_t a, std::size_t b)
{
    if (a != b) throw std::invalid_argument("diffusion_action: dimension mismatch");
}

std::vector<double> draw_normals(RngStream& rng, std::size_t d)
{
    std::vector<double> xi(d);
    for (double& v : xi) v = rng.normal();
    return xi;
}

} // namespace

std::vector<double> diffusion_action(Diffusion kind, const std::vector<double>& xhat,
                                     const std::vector<double>& x, const std::vector<double>& xi)
{
    check_dims(xhat.size(), x.size());
    check_dims(x.size(), xi.size());
    const std::size_t d = x.size();
    std::vector<double> out(d);
    if (kind == Diffusion::Isotropic) {
        double sq = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            const double dx = xhat[j] - x[j];
            sq += dx * dx;
        }
        const double norm = std::sqrt(sq);
        for (std::size_t j = 0; j < d; ++j) out[j] = norm * xi[j];
    } else {
        for (std::size_t j = 0; j < d; ++j) out[j] = (xhat[j] - x[j]) * xi[j];
    }
    return out;
}

StepInfo gkbo_step(Swarm& swarm, const Objective& objective, const DynamicsConfig& cfg,
                   RngStream& rng)
{
    StepInfo info;
    const std::vector<double> xhat = consensus_point(swarm, objective, cfg.alpha, cfg.consensus);
    const std::size_t d = xhat.size();
    const double noise = cfg.sigma_f * std::sqrt(cfg.epsilon);
    const auto leaders = swarm.indices(Label::Leader);

    // Phase 1: leaders relax deterministically toward the step-start x^.
    for (std::size_t k : leaders) {
        if (cfg.interaction_prob < 1.0 && rng.uniform() >= cfg.interaction_prob) continue;
        auto& y = swarm[k].position;
        for (std::size_t j = 0; j < d; ++j) y[j] += cfg.nu_l * cfg.epsilon * (xhat[j] - y[j]);
    }

    // Phase 2: followers drift toward a randomly selected post-update leader
    // and diffuse. Diffusion uses the pre-move follower position.
    info.leaders_missing = leaders.empty();
    for (auto& p : swarm.particles) {
        if (p.label != Label::Follower) continue;
        if (cfg.interaction_prob < 1.0 && rng.uniform() >= cfg.interaction_prob) continue;
        const std::vector<double>* y = nullptr;
        if (!leaders.empty()) y = &swarm[leaders[rng.pick(leaders.size())]].position;
        const auto xi = draw_normals(rng, d);
        const auto dxi = diffusion_action(cfg.diffusion, xhat, p.position, xi);
        for (std::size_t j = 0; j < d; ++j) {
            double drift = y ? cfg.nu_f * cfg.epsilon * ((*y)[j] - p.position[j]) : 0.0;
            p.position[j] += drift + noise * dxi[j];
        }
    }
    return info;
}

StepInfo kbo_step(Swarm& swarm, const Objective& objective, const DynamicsConfig& cfg,
                  RngStream& rng)
{
    const std::vector<double> xhat = consensus_point(swarm, objective, cfg.alpha, cfg.consensus);
    const std::size_t d = xhat.size();
    const double noise = cfg.sigma_f * std::sqrt(cfg.epsilon);
    for (auto& p : swarm.particles) {
        if (cfg.interaction_prob < 1.0 && rng.uniform() >= cfg.interaction_prob) continue;
        const auto xi = draw_normals(rng, d);
        const auto dxi = diffusion_action(cfg.diffusion, xhat, p.position, xi);
        for (std::size_t j = 0; j < d; ++j)
            p.position[j] += cfg.nu_f * cfg.epsilon * (xhat[j] - p.position[j]) + noise * dxi[j];
    }
    return {};
}

StepInfo ga_step(Swarm& swarm, const Objective& objective, const DynamicsConfig& cfg,
                 RngStream& rng, bool modified)
{
    StepInfo info;
    std::vector<double> xhat;
    if (modified) xhat = consensus_point(swarm, objective, cfg.alpha, cfg.consensus);
    const auto parents = swarm.indices(Label::Leader);
    info.leaders_missing = parents.empty();
    const double jump_prob = std::min(1.0, cfg.nu_f * cfg.epsilon);
    const double noise = cfg.sigma_f * std::sqrt(cfg.epsilon);

    for (auto& p : swarm.particles) {
        if (p.label != Label::Follower) continue; // parents keep their position
        if (cfg.interaction_prob < 1.0 && rng.uniform() >= cfg.interaction_prob) continue;
        const std::size_t d = p.position.size();
        if (!parents.empty() && rng.uniform() < jump_prob)
            p.position = swarm[parents[rng.pick(parents.size())]].position;
        const auto xi = draw_normals(rng, d);
        if (modified) {
            const auto dxi = diffusion_action(cfg.diffusion, xhat, p.position, xi);
            for (std::size_t j = 0; j < d; ++j) p.position[j] += noise * dxi[j];
        } else {
            for (std::size_t j = 0; j < d; ++j) p.position[j] += noise * xi[j];
        }
    }
    return info;
}

StepInfo step(Swarm& swarm, const Objective& objective, const DynamicsConfig& cfg, RngStream& rng)
{
    switch (cfg.method) {
    case Method::GKBO: return gkbo_step(swarm, objective, cfg, rng);
    case Method::KBO: return kbo_step(swarm, objective, cfg, rng);
    case Method::GA: return ga_step(swarm, objective, cfg, rng, false);
    case Method::GAModified: return ga_step(swarm, objective, cfg, rng, true);
    }
    throw std::logic_error("unreachable method");
}

} // namespace gkbo
