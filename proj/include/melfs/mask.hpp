#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace melfs {

/// Per-feature selection bits, one entry per feature (0 = dropped, 1 = selected).
using FeatureMask = std::vector<std::uint8_t>;

inline std::size_t count_selected(const FeatureMask& mask) {
    std::size_t n = 0;
    for (auto b : mask) n += b ? 1 : 0;
    return n;
}

inline std::vector<std::size_t> selected_indices(const FeatureMask& mask) {
    std::vector<std::size_t> idx;
    idx.reserve(mask.size());
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) idx.push_back(i);
    return idx;
}

}  // namespace melfs
