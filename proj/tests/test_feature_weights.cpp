#include <doctest.h>

#include <cmath>
#include <vector>

#include "melfs/feature_weights.hpp"
#include "support/oracles.hpp"

using namespace melfs;
namespace ts = melfs::testsupport;

namespace {

FeatureWeights from(std::vector<double> values) {
    FeatureWeights w(values.size());
    w.w = std::move(values);
    return w;
}

MaskDelta random_delta(std::size_t dims, Rng& rng) {
    MaskDelta delta;
    for (std::size_t i = 0; i < dims; ++i) {
        const double r = rng.uniform();
        if (r < 0.3)
            delta.gained.push_back(i);
        else if (r < 0.6)
            delta.dropped.push_back(i);
    }
    return delta;
}

}  // namespace

TEST_CASE("accuracy gain credits gained features and debits dropped ones") {
    FeatureWeights w(12);
    update_weights(w, {{3}, {9}}, 0.7, 0.8);
    CHECK(w.w[3] == 0.8 - 0.7);
    CHECK(w.w[9] == -(0.8 - 0.7));
    for (std::size_t i : {0, 1, 2, 4, 5, 6, 7, 8, 10, 11}) CHECK(w.w[i] == 0.0);
}

TEST_CASE("accuracy loss debits gained features and credits dropped ones") {
    FeatureWeights w(12);
    update_weights(w, {{3}, {9}}, 0.7, 0.6);
    CHECK(w.w[3] == -(0.7 - 0.6));
    CHECK(w.w[9] == 0.7 - 0.6);
}

TEST_CASE("equal accuracies leave the weights untouched") {
    auto w = from({0.5, -0.25, 0.0});
    const auto before = w.w;
    update_weights(w, {{0, 2}, {1}}, 0.42, 0.42);
    CHECK(w.w == before);
}

TEST_CASE("randomized updates match the direct transcription exactly") {
    Rng rng(2023);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t dims = 1 + rng.uniform_index(30);
        FeatureWeights w(dims);
        for (auto& v : w.w) v = rng.uniform(-1.0, 1.0);
        const MaskDelta delta = random_delta(dims, rng);
        const double prev = rng.uniform(), next = rng.uniform();

        const auto expected =
            ts::oracle_update_weights(w.w, delta.gained, delta.dropped, prev, next);
        update_weights(w, delta, prev, next);
        REQUIRE(w.w == expected);
    }
}

TEST_CASE("positive mass sums only strictly positive weights") {
    CHECK(positive_mass(from({0.2, 0.3, -0.1, 0.5})) == 1.0);
    CHECK(positive_mass(from({0.0, 0.0})) == 0.0);
    CHECK(positive_mass(from({-1.0, -2.0})) == 0.0);
}

TEST_CASE("selection probabilities normalize the positive weights") {
    const auto rho = selection_probabilities(from({0.2, 0.3, -0.1, 0.5}));
    CHECK(rho[0] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(rho[1] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(rho[2] == 0.0);
    CHECK(rho[3] == doctest::Approx(0.5).epsilon(1e-12));

    const auto onehot = selection_probabilities(from({0.0, -3.0, 0.7}));
    CHECK(onehot == std::vector<double>{0.0, 0.0, 1.0});

    CHECK_THROWS_AS(selection_probabilities(from({0.0, -1.0})), std::invalid_argument);
}

TEST_CASE("probabilities sum to one and vanish on non-positive weights") {
    Rng rng(314);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t dims = 2 + rng.uniform_index(40);
        FeatureWeights w(dims);
        bool any_positive = false;
        for (auto& v : w.w) {
            v = rng.uniform(-1.0, 1.0);
            any_positive = any_positive || v > 0.0;
        }
        if (!any_positive) continue;
        const auto rho = selection_probabilities(w);
        double sum = 0.0;
        for (std::size_t i = 0; i < dims; ++i) {
            if (w.w[i] <= 0.0) REQUIRE(rho[i] == 0.0);
            sum += rho[i];
        }
        REQUIRE(std::abs(sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("scaling all weights by a positive factor leaves probabilities unchanged") {
    Rng rng(606);
    for (int trial = 0; trial < 100; ++trial) {
        FeatureWeights w(10);
        for (auto& v : w.w) v = rng.uniform(-1.0, 1.0);
        if (positive_mass(w) == 0.0) continue;
        const double lambda = rng.uniform(0.1, 10.0);
        FeatureWeights scaled = w;
        for (auto& v : scaled.w) v *= lambda;

        const auto rho = selection_probabilities(w);
        const auto rho_scaled = selection_probabilities(scaled);
        for (std::size_t i = 0; i < rho.size(); ++i)
            REQUIRE(std::abs(rho[i] - rho_scaled[i]) <= 1e-12);
    }
}

TEST_CASE("a single positive weight forces that feature") {
    Rng rng(1);
    const auto w = from({-0.3, 0.0, 0.9, -0.1});
    for (int i = 0; i < 50; ++i) {
        const FeatureMask mask = roulette_sample(w, rng);
        CHECK(mask == FeatureMask{0, 0, 1, 0});
    }
}

TEST_CASE("zero positive mass falls back to one random feature") {
    Rng rng(2);
    const auto w = from({0.0, 0.0, 0.0, -1.0});
    for (int i = 0; i < 200; ++i) {
        const FeatureMask mask = roulette_sample(w, rng);
        CHECK(count_selected(mask) == 1);
    }
}

TEST_CASE("sample frequency follows weight order and excludes non-positive weights") {
    Rng rng(73);
    const auto w = from({10.0, 1.0, 1.0, -5.0});
    std::vector<int> hits(4, 0);
    const int trials = 100000;
    for (int t = 0; t < trials; ++t) {
        const FeatureMask mask = roulette_sample(w, rng);
        REQUIRE(count_selected(mask) >= 1);
        for (std::size_t i = 0; i < 4; ++i)
            if (mask[i]) ++hits[i];
    }
    CHECK(hits[0] > hits[1]);
    CHECK(hits[3] == 0);
}

TEST_CASE("sampled masks never pick non-positive weights and are never empty") {
    Rng rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        FeatureWeights w(1 + rng.uniform_index(25));
        for (auto& v : w.w) v = rng.uniform(-1.0, 1.0);
        const bool has_positive = positive_mass(w) > 0.0;
        const FeatureMask mask = roulette_sample(w, rng);
        REQUIRE(count_selected(mask) >= 1);
        if (has_positive)
            for (std::size_t i = 0; i < mask.size(); ++i)
                if (mask[i]) REQUIRE(w.w[i] > 0.0);
    }
}

TEST_CASE("mask_delta separates gains from drops") {
    const MaskDelta delta = mask_delta({1, 0, 1, 0, 1}, {1, 1, 0, 0, 1});
    CHECK(delta.gained == std::vector<std::size_t>{1});
    CHECK(delta.dropped == std::vector<std::size_t>{2});
    CHECK_THROWS_AS(mask_delta({1}, {1, 0}), std::invalid_argument);
}

TEST_CASE("a feature that always helps accumulates positive weight") {
    FeatureWeights w(5);
    update_weights(w, {{2}, {}}, 0.50, 0.60);  // appears, accuracy rises
    update_weights(w, {{}, {2}}, 0.60, 0.45);  // disappears, accuracy falls
    update_weights(w, {{2}, {}}, 0.45, 0.70);  // reappears, accuracy rises
    CHECK(w.w[2] > 0.0);
    CHECK(w.w[2] == doctest::Approx(0.1 + 0.15 + 0.25));
}
