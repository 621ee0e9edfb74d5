#include "melfs/classifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace melfs {

namespace {

int knn_predict_indexed(const Dataset& train, std::span<const std::size_t> train_rows,
                        std::span<const double> query,
                        std::span<const std::size_t> features, int k) {
    const std::size_t n_train = train_rows.size();
    const std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), n_train);

    // (squared distance, position in train_rows); pair ordering is the tie-break
    std::vector<std::pair<double, std::size_t>> dist(n_train);
    for (std::size_t t = 0; t < n_train; ++t) {
        const double* row = train.samples.data() + train_rows[t] * train.n_features;
        double d2 = 0.0;
        for (std::size_t f : features) {
            const double diff = query[f] - row[f];
            d2 += diff * diff;
        }
        dist[t] = {d2, t};
    }
    std::partial_sort(dist.begin(), dist.begin() + kk, dist.end());

    // majority vote, smallest class id wins ties
    std::vector<std::pair<int, int>> votes;  // (class id, count), ascending by id
    for (std::size_t i = 0; i < kk; ++i) {
        const int cls = train.labels[train_rows[dist[i].second]];
        auto it = std::lower_bound(votes.begin(), votes.end(), std::pair<int, int>{cls, 0});
        if (it != votes.end() && it->first == cls)
            ++it->second;
        else
            votes.insert(it, {cls, 1});
    }
    int best_cls = votes.front().first;
    int best_count = votes.front().second;
    for (const auto& [cls, count] : votes) {
        if (count > best_count) {
            best_cls = cls;
            best_count = count;
        }
    }
    return best_cls;
}

}  // namespace

int knn_predict(const Dataset& train, std::span<const std::size_t> train_rows,
                std::span<const double> query, const FeatureMask& mask, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (train_rows.empty()) throw std::invalid_argument("training set is empty");
    const auto features = selected_indices(mask);
    if (features.empty()) throw std::invalid_argument("feature mask selects no features");
    return knn_predict_indexed(train, train_rows, query, features, k);
}

double cv_accuracy(const Dataset& ds, const FeatureMask& mask, const FoldPlan& plan,
                   int k_nn) {
    if (plan.assignment.size() != ds.n_samples)
        throw std::invalid_argument("fold plan was not built on this dataset");
    const auto features = selected_indices(mask);
    if (features.empty()) throw std::invalid_argument("feature mask selects no features");
    if (k_nn < 1) throw std::invalid_argument("k must be at least 1");

    std::size_t correct = 0;
    std::vector<std::size_t> train_rows;
    train_rows.reserve(ds.n_samples);
    for (int fold = 0; fold < plan.k; ++fold) {
        train_rows.clear();
        for (std::size_t i = 0; i < ds.n_samples; ++i)
            if (plan.assignment[i] != fold) train_rows.push_back(i);
        for (std::size_t i = 0; i < ds.n_samples; ++i) {
            if (plan.assignment[i] != fold) continue;
            const int predicted = knn_predict_indexed(ds, train_rows, ds.row(i), features, k_nn);
            if (predicted == ds.labels[i]) ++correct;
        }
    }
    return static_cast<double>(correct) / static_cast<double>(ds.n_samples);
}

}  // namespace melfs
