#include "support/synthetic.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace melfs::testsupport {

double normal(Rng& rng) {
    const double u1 = 1.0 - rng.uniform();  // (0,1], keeps log finite
    const double u2 = rng.uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
}

Dataset planted_dataset(std::size_t n_samples, std::size_t n_features,
                        const std::vector<std::size_t>& planted, double shift,
                        std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint8_t> is_planted(n_features, 0);
    for (std::size_t j : planted) is_planted.at(j) = 1;

    std::vector<double> samples(n_samples * n_features);
    std::vector<int> labels(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        labels[i] = static_cast<int>(i % 2);
        for (std::size_t j = 0; j < n_features; ++j) {
            double v = normal(rng);
            if (is_planted[j]) v += shift * labels[i];
            samples[i * n_features + j] = v;
        }
    }
    return make_dataset(std::move(samples), std::move(labels), n_features);
}

Dataset random_dataset(std::size_t n_samples, std::size_t n_features, int n_classes,
                       std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> samples(n_samples * n_features);
    std::vector<int> labels(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        labels[i] = static_cast<int>(i % static_cast<std::size_t>(n_classes));
        for (std::size_t j = 0; j < n_features; ++j)
            samples[i * n_features + j] = rng.uniform();
    }
    return make_dataset(std::move(samples), std::move(labels), n_features);
}

void write_csv(const Dataset& ds, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    char buf[64];
    for (std::size_t i = 0; i < ds.n_samples; ++i) {
        for (std::size_t j = 0; j < ds.n_features; ++j) {
            std::snprintf(buf, sizeof(buf), "%.17g", ds.at(i, j));
            out << buf << ',';
        }
        out << ds.labels[i] << '\n';
    }
}

}  // namespace melfs::testsupport
