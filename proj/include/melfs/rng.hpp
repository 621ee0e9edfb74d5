#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace melfs {

/// Source of uniform draws in [0,1). Kept abstract so tests can pin the
/// random values fed into the kinematic updates.
struct UniformSource {
    virtual ~UniformSource() = default;
    virtual double next() = 0;
};

/// Deterministic RNG used throughout. All derived draws (bounded ints,
/// shuffles) are implemented here rather than with std distributions,
/// whose output is implementation-defined.
class Rng final : public UniformSource {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    double next() override { return uniform(); }

    /// Unbiased integer in [0,n). n must be >= 1.
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        for (;;) {
            const std::uint64_t x = engine_();
            const std::uint64_t r = x % n;
            if (x - r <= max - (n - 1)) return r;
        }
    }

    /// Fisher-Yates shuffle with a pinned draw order.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace melfs
