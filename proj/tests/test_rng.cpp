#include <doctest.h>

#include <algorithm>
#include <vector>

#include "melfs/rng.hpp"

using melfs::Rng;

TEST_CASE("uniform draws stay in [0,1) and are seed-deterministic") {
    Rng a(123), b(123), c(124);
    bool any_diff = false;
    for (int i = 0; i < 10000; ++i) {
        const double x = a.uniform();
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        CHECK(x == b.uniform());
        if (x != c.uniform()) any_diff = true;
    }
    CHECK(any_diff);
}

TEST_CASE("bounded uniform respects its interval") {
    Rng rng(7);
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform(-0.5, 0.5);
        CHECK(x >= -0.5);
        CHECK(x < 0.5);
    }
}

TEST_CASE("uniform_index covers [0,n) roughly evenly") {
    Rng rng(42);
    std::vector<int> counts(10, 0);
    for (int i = 0; i < 100000; ++i) ++counts[rng.uniform_index(10)];
    for (int c : counts) {
        CHECK(c > 9000);
        CHECK(c < 11000);
    }
}

TEST_CASE("shuffle is a permutation and seed-deterministic") {
    std::vector<int> v(50);
    for (int i = 0; i < 50; ++i) v[i] = i;

    auto first = v;
    Rng a(9);
    a.shuffle(first);

    auto second = v;
    Rng b(9);
    b.shuffle(second);
    CHECK(first == second);

    std::vector<int> sorted = first;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == v);
}
