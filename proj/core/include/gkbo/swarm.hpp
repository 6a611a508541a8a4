#pragma once

#include <cstddef>
#include <vector>

namespace gkbo {

enum class Label : int { Follower = 0, Leader = 1 };

struct Particle {
    std::vector<double> position;
    Label label = Label::Follower;
};

struct Swarm {
    std::vector<Particle> particles;

    std::size_t size() const { return particles.size(); }
    bool empty() const { return particles.empty(); }
    Particle& operator[](std::size_t i) { return particles[i]; }
    const Particle& operator[](std::size_t i) const { return particles[i]; }

    std::size_t count(Label l) const
    {
        std::size_t n = 0;
        for (const auto& p : particles)
            if (p.label == l) ++n;
        return n;
    }

    std::vector<std::size_t> indices(Label l) const
    {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < particles.size(); ++i)
            if (particles[i].label == l) idx.push_back(i);
        return idx;
    }
};

} // namespace gkbo
