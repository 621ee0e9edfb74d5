#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "melfs/dataset.hpp"
#include "melfs/mask.hpp"

namespace melfs::testsupport {

// Independent reference implementations used to pin expected values. These
// deliberately share no code with the library paths they check.

/// Sort-all-distances KNN: builds the full distance list per query and
/// stable-sorts it, so distance ties fall back to the earlier training row.
int oracle_knn_predict(const Dataset& ds, std::span<const std::size_t> train_rows,
                       std::span<const double> query, const FeatureMask& mask, int k);

/// Plain cross-validation loop over copied per-fold matrices, pooled count.
double oracle_cv_accuracy(const Dataset& ds, const FeatureMask& mask, const FoldPlan& plan,
                          int k_nn);

/// Direct transcription of the two accuracy-delta weight-update cases.
std::vector<double> oracle_update_weights(std::vector<double> w,
                                          const std::vector<std::size_t>& gained,
                                          const std::vector<std::size_t>& dropped,
                                          double acc_prev, double acc_new);

/// Direct transcription of the positive-mass normalization.
std::vector<double> oracle_selection_probabilities(const std::vector<double>& w);

double oracle_fitness(double error_rate, std::size_t n_selected, std::size_t n_total,
                      double alpha, double beta);

}  // namespace melfs::testsupport
