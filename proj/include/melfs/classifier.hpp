#pragma once

#include <cstddef>
#include <span>

#include "melfs/dataset.hpp"
#include "melfs/mask.hpp"

namespace melfs {

/// Result of evaluating one feature mask.
struct EvalOutcome {
    double accuracy = 0.0;
    double error_rate = 0.0;      // 1 - accuracy
    std::size_t n_selected = 0;
    double fitness = 0.0;
};

/// KNN vote over the masked coordinates of the given training rows.
/// Distances are squared Euclidean (monotone for ranking). Distance ties
/// break toward the earlier training row, vote ties toward the smaller
/// class id, so predictions are bit-reproducible.
int knn_predict(const Dataset& train, std::span<const std::size_t> train_rows,
                std::span<const double> query, const FeatureMask& mask, int k);

/// Pooled k-fold accuracy: for each fold, train on the rest and predict the
/// held-out rows; accuracy = total correct / n_samples.
double cv_accuracy(const Dataset& ds, const FeatureMask& mask, const FoldPlan& plan,
                   int k_nn);

}  // namespace melfs
