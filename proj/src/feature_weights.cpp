#include "melfs/feature_weights.hpp"

#include <stdexcept>

namespace melfs {

MaskDelta mask_delta(const FeatureMask& prev, const FeatureMask& next) {
    if (prev.size() != next.size())
        throw std::invalid_argument("mask lengths differ");
    MaskDelta delta;
    for (std::size_t i = 0; i < next.size(); ++i) {
        if (next[i] && !prev[i]) delta.gained.push_back(i);
        if (prev[i] && !next[i]) delta.dropped.push_back(i);
    }
    return delta;
}

void update_weights(FeatureWeights& weights, const MaskDelta& delta, double prev_acc,
                    double new_acc) {
    if (new_acc > prev_acc) {
        const double gain = new_acc - prev_acc;
        for (std::size_t i : delta.gained) weights.w[i] += gain;
        for (std::size_t i : delta.dropped) weights.w[i] -= gain;
    } else if (new_acc < prev_acc) {
        const double loss = prev_acc - new_acc;
        for (std::size_t i : delta.gained) weights.w[i] -= loss;
        for (std::size_t i : delta.dropped) weights.w[i] += loss;
    }
}

double positive_mass(const FeatureWeights& weights) {
    double mass = 0.0;
    for (double v : weights.w)
        if (v > 0.0) mass += v;
    return mass;
}

std::vector<double> selection_probabilities(const FeatureWeights& weights) {
    const double mass = positive_mass(weights);
    if (mass <= 0.0)
        throw std::invalid_argument("no feature has positive weight");
    std::vector<double> rho(weights.size(), 0.0);
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights.w[i] > 0.0) rho[i] = weights.w[i] / mass;
    return rho;
}

FeatureMask roulette_sample(const FeatureWeights& weights, Rng& rng) {
    FeatureMask mask(weights.size(), 0);

    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < weights.size(); ++i)
        if (weights.w[i] > 0.0) positive.push_back(i);

    if (positive.empty()) {
        mask[rng.uniform_index(weights.size())] = 1;
        return mask;
    }

    std::vector<double> remaining(positive.size());
    double total = 0.0;
    for (std::size_t j = 0; j < positive.size(); ++j) {
        remaining[j] = weights.w[positive[j]];
        total += remaining[j];
    }

    const std::size_t m = 1 + static_cast<std::size_t>(rng.uniform_index(positive.size()));
    for (std::size_t draw = 0; draw < m; ++draw) {
        const double target = rng.uniform() * total;
        double cum = 0.0;
        std::size_t chosen = positive.size();
        for (std::size_t j = 0; j < positive.size(); ++j) {
            if (remaining[j] <= 0.0) continue;
            cum += remaining[j];
            if (target < cum) {
                chosen = j;
                break;
            }
        }
        if (chosen == positive.size()) {
            // fp drift can push target past the last slot; take the last live one
            for (std::size_t j = positive.size(); j-- > 0;) {
                if (remaining[j] > 0.0) {
                    chosen = j;
                    break;
                }
            }
        }
        mask[positive[chosen]] = 1;
        total -= remaining[chosen];
        remaining[chosen] = 0.0;
    }
    return mask;
}

}  // namespace melfs
