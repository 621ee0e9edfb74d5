#include "melfs/swarm.hpp"

#include <algorithm>
#include <stdexcept>

namespace melfs {

void PsoParams::validate() const {
    if (!(lb < ub)) throw std::invalid_argument("position bounds require lb < ub");
    if (!(v_max > 0.0)) throw std::invalid_argument("v_max must be positive");
    if (!(theta > lb && theta < ub))
        throw std::invalid_argument("theta must lie strictly inside [lb, ub]");
    if (omega < 0.0 || c1 < 0.0 || c2 < 0.0 || c3 < 0.0)
        throw std::invalid_argument("learning factors must be non-negative");
}

std::vector<Particle> init_population(std::size_t np, std::size_t dims,
                                      const PsoParams& params, Rng& rng) {
    params.validate();
    if (np < 2 || np % 2 != 0)
        throw std::invalid_argument("population size must be even and at least 2 "
                                    "(two equal-sized subpopulations)");
    if (dims < 1) throw std::invalid_argument("need at least one dimension");

    std::vector<Particle> swarm(np);
    for (auto& p : swarm) {
        p.position.resize(dims);
        p.velocity.resize(dims);
        for (auto& x : p.position) x = rng.uniform(params.lb, params.ub);
        for (auto& v : p.velocity) v = rng.uniform(-params.v_max, params.v_max);
        p.mask = binarize(p.position, params.theta);
        p.prev_mask = p.mask;
        p.pbest_position = p.position;
    }
    return swarm;
}

std::vector<Particle> init_population(std::size_t np, std::size_t dims,
                                      const PsoParams& params, std::uint64_t seed) {
    Rng rng(seed);
    return init_population(np, dims, params, rng);
}

FeatureMask binarize(std::span<const double> position, double theta) {
    FeatureMask mask(position.size(), 0);
    for (std::size_t i = 0; i < position.size(); ++i)
        mask[i] = position[i] > theta ? 1 : 0;
    return mask;
}

void repair_mask(FeatureMask& mask, std::span<const double> position) {
    for (auto b : mask)
        if (b) return;
    const auto it = std::max_element(position.begin(), position.end());
    mask[static_cast<std::size_t>(it - position.begin())] = 1;
}

std::vector<double> mask_to_position(const FeatureMask& mask, const PsoParams& params) {
    std::vector<double> position(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i)
        position[i] = mask[i] ? params.ub : params.lb;
    return position;
}

namespace {

inline double clamp(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

void kinematic_step(Particle& p, std::span<const double> pbest,
                    std::span<const double> gbest, const double* sbest,
                    const PsoParams& params, UniformSource& uniform) {
    const std::size_t dims = p.position.size();
    const bool transfer = sbest != nullptr && params.c3 != 0.0;
    for (std::size_t i = 0; i < dims; ++i) {
        const double x = p.position[i];
        double v = params.omega * p.velocity[i];
        v += params.c1 * uniform.next() * (pbest[i] - x);
        v += params.c2 * uniform.next() * (gbest[i] - x);
        if (transfer) v += params.c3 * uniform.next() * (sbest[i] - x);
        v = clamp(v, -params.v_max, params.v_max);
        p.velocity[i] = v;
        p.position[i] = clamp(x + v, params.lb, params.ub);
    }
}

}  // namespace

void pso_step(Particle& p, std::span<const double> pbest, std::span<const double> gbest,
              const PsoParams& params, UniformSource& uniform) {
    kinematic_step(p, pbest, gbest, nullptr, params, uniform);
}

void mel_step(Particle& p, std::span<const double> pbest, std::span<const double> gbest,
              std::span<const double> sbest, const PsoParams& params,
              UniformSource& uniform) {
    kinematic_step(p, pbest, gbest, sbest.data(), params, uniform);
}

void update_bests(BestRecords& records, std::size_t sub_index,
                  const std::vector<double>& position, const FeatureMask& mask,
                  const EvalOutcome& outcome) {
    auto maybe_replace = [&](BestEntry& entry) {
        if (outcome.fitness < entry.fitness) {
            entry.position = position;
            entry.mask = mask;
            entry.fitness = outcome.fitness;
            entry.accuracy = outcome.accuracy;
        }
    };
    maybe_replace(records.sub.at(sub_index));
    maybe_replace(records.global);
}

}  // namespace melfs
