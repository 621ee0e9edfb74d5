#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "melfs/dataset.hpp"
#include "melfs/rng.hpp"

namespace melfs::testsupport {

/// Standard normal draw via Box-Muller on our deterministic RNG.
double normal(Rng& rng);

/// Balanced two-class dataset where only the planted feature columns carry
/// signal: x = N(0,1) + shift * label on planted columns, N(0,1) noise
/// elsewhere. Labels alternate 0,1,0,1,...
Dataset planted_dataset(std::size_t n_samples, std::size_t n_features,
                        const std::vector<std::size_t>& planted, double shift,
                        std::uint64_t seed);

/// Uniform-noise dataset with labels assigned round-robin over n_classes
/// (no feature-label relationship).
Dataset random_dataset(std::size_t n_samples, std::size_t n_features, int n_classes,
                       std::uint64_t seed);

/// Writes a dataset as CSV with the integer label in the last column.
void write_csv(const Dataset& ds, const std::filesystem::path& path);

}  // namespace melfs::testsupport
