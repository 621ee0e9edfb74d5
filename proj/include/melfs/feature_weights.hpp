#pragma once

#include <cstddef>
#include <vector>

#include "melfs/mask.hpp"
#include "melfs/rng.hpp"

namespace melfs {

/// Population-shared per-feature importance scores. Starts at zero and is
/// credited/debited by accuracy deltas as features appear and disappear.
/// Values are unbounded; the roulette probabilities are scale-invariant.
struct FeatureWeights {
    explicit FeatureWeights(std::size_t n_features) : w(n_features, 0.0) {}
    std::vector<double> w;
    std::size_t size() const { return w.size(); }
};

/// Indices that changed between two consecutive masks of one particle.
struct MaskDelta {
    std::vector<std::size_t> gained;   // newly selected this round
    std::vector<std::size_t> dropped;  // discarded this round
};

MaskDelta mask_delta(const FeatureMask& prev, const FeatureMask& next);

/// Accuracy-delta update. With d = new_acc - prev_acc:
///   d > 0: gained += d, dropped -= d
///   d < 0: gained -= |d|, dropped += |d|
///   d = 0: no change
/// Features outside the delta are untouched.
void update_weights(FeatureWeights& weights, const MaskDelta& delta, double prev_acc,
                    double new_acc);

/// Sum of the strictly positive weights.
double positive_mass(const FeatureWeights& weights);

/// Per-feature selection probabilities: w[n]/delta for positive weights,
/// zero elsewhere. Throws when the positive mass is zero; callers fall back
/// via roulette_sample.
std::vector<double> selection_probabilities(const FeatureWeights& weights);

/// Draws a mask for a particle guided by the learned weights. With P
/// positive-weight features, the subset size is uniform on {1..P} and
/// features are drawn without replacement, proportional to weight. With no
/// positive weight, one uniformly random feature is selected so the mask is
/// never empty.
FeatureMask roulette_sample(const FeatureWeights& weights, Rng& rng);

}  // namespace melfs
