#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace melfs {

/// Immutable sample matrix with integer class labels. Safe to share across
/// concurrent fitness evaluators once constructed.
struct Dataset {
    std::vector<double> samples;  // row-major, n_samples x n_features
    std::vector<int> labels;      // one class id per row
    std::size_t n_samples = 0;
    std::size_t n_features = 0;
    std::vector<int> class_ids;   // sorted distinct labels

    std::span<const double> row(std::size_t i) const {
        return {samples.data() + i * n_features, n_features};
    }
    double at(std::size_t i, std::size_t j) const { return samples[i * n_features + j]; }
};

/// Builds the derived fields and checks the shape/finiteness invariants.
Dataset make_dataset(std::vector<double> samples, std::vector<int> labels,
                     std::size_t n_features);

enum class LabelColumn { First, Last };

/// Loads a comma-separated file. Labels are parsed as discrete tokens and
/// re-encoded as dense integers 0..C-1 in order of first appearance.
Dataset load_csv(const std::string& path, LabelColumn label_column,
                 bool has_header = false);

/// Deterministic stratified fold assignment.
struct FoldPlan {
    int k = 0;
    std::vector<int> assignment;  // fold index per sample row
    std::uint64_t seed = 0;
};

/// Per-class shuffle followed by round-robin assignment. The round-robin
/// cursor carries across classes so every fold is nonempty whenever
/// n_samples >= k.
FoldPlan stratified_kfold(const Dataset& ds, int k, std::uint64_t seed);

/// Maps every feature column to [0,1]; constant columns map to 0.
Dataset minmax_scale(const Dataset& ds);

}  // namespace melfs
