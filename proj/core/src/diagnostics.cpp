#include "gkbo/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace gkbo {

MomentSnapshot snapshot(const Swarm& swarm, const Objective& objective, double alpha,
                        ConsensusSelector selector, double t)
{
    if (swarm.empty()) throw std::invalid_argument("snapshot: empty swarm");
    const std::size_t n = swarm.size();
    const std::size_t d = swarm[0].position.size();

    MomentSnapshot s;
    s.t = t;
    s.m0.assign(d, 0.0);
    s.m1.assign(d, 0.0);
    std::size_t n1 = 0;
    for (const auto& p : swarm.particles) {
        auto& m = (p.label == Label::Leader) ? s.m1 : s.m0;
        for (std::size_t j = 0; j < d; ++j) m[j] += p.position[j] / static_cast<double>(n);
        if (p.label == Label::Leader) ++n1;
    }
    s.rho1 = static_cast<double>(n1) / static_cast<double>(n);
    s.rho0 = 1.0 - s.rho1;

    auto normalized = [d](const std::vector<double>& m, double rho) {
        std::vector<double> out(d);
        for (std::size_t j = 0; j < d; ++j) out[j] = m[j] / rho;
        return out;
    };
    if (s.rho0 > 0.0) s.M0 = normalized(s.m0, s.rho0);
    if (s.rho1 > 0.0) s.M1 = normalized(s.m1, s.rho1);

    for (const auto& p : swarm.particles) {
        const auto& mean = (p.label == Label::Leader) ? s.M1 : s.M0;
        double sq = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            const double dx = p.position[j] - (*mean)[j];
            sq += dx * dx;
        }
        ((p.label == Label::Leader) ? s.v1 : s.v0) += sq / static_cast<double>(n);
    }
    s.V = s.v0 + s.v1;

    s.xhat = consensus_point(swarm, objective, alpha, selector);
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j)
        acc = std::max(acc, std::abs(s.xhat[j] - objective.global_min_location[j]));
    s.accuracy = acc;
    return s;
}

DecayFit fit_decay_rate(const std::vector<std::pair<double, double>>& series)
{
    if (series.size() < 10) throw std::invalid_argument("fit_decay_rate: need >= 10 samples");
    const auto n = static_cast<double>(series.size());
    double st = 0.0, sy = 0.0;
    for (const auto& [t, v] : series) {
        if (!(v > 0.0)) throw std::invalid_argument("fit_decay_rate: nonpositive value in series");
        st += t;
        sy += std::log(v);
    }
    const double tbar = st / n, ybar = sy / n;
    double stt = 0.0, sty = 0.0, syy = 0.0;
    for (const auto& [t, v] : series) {
        const double dt = t - tbar, dy = std::log(v) - ybar;
        stt += dt * dt;
        sty += dt * dy;
        syy += dy * dy;
    }
    if (stt == 0.0) throw std::invalid_argument("fit_decay_rate: degenerate time axis");
    DecayFit fit;
    const double slope = sty / stt;
    fit.rate = -slope;
    fit.r_squared = (syy == 0.0) ? 1.0 : (sty * sty) / (stt * syy);
    return fit;
}

std::optional<double> mean_gap_squared(const MomentSnapshot& s)
{
    if (!s.M0 || !s.M1) return std::nullopt;
    double sq = 0.0;
    for (std::size_t j = 0; j < s.M0->size(); ++j) {
        const double dx = (*s.M0)[j] - (*s.M1)[j];
        sq += dx * dx;
    }
    return sq;
}

} // namespace gkbo
