#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "selfinv/roots.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace selfinv;

TEST_CASE("find_roots examples") {
    const auto quad = find_roots({1.0, 0.0, 1.0});
    CHECK(quad.converged);
    CHECK(testing::multiset_distance(quad.roots, {{0.0, 1.0}, {0.0, -1.0}}) < 1e-12);
    CHECK(quad.circle_count == 2);

    const double s5 = std::sqrt(5.0);
    const auto recip = find_roots({1.0, -3.0, 1.0});
    CHECK(testing::multiset_distance(recip.roots, {(3.0 + s5) / 2.0, (3.0 - s5) / 2.0}) < 1e-12);
    CHECK(recip.pair_count == 1);

    const auto cube = find_roots({1.0, 0.0, 0.0, -1.0});
    std::vector<ComplexDouble> unity;
    for (int k = 0; k < 3; ++k) unity.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / 3.0));
    CHECK(testing::multiset_distance(cube.roots, unity) < 1e-12);
    CHECK(cube.circle_count == 3);

    for (double r : cube.residuals) CHECK(r < 1e-12);
}

TEST_CASE("find_roots input checks") {
    CHECK_THROWS_AS(find_roots({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(find_roots({0.0, 1.0, 1.0}), std::invalid_argument);
    const auto linear = find_roots({2.0, -4.0});
    CHECK(std::abs(linear.roots[0] - 2.0) < 1e-15);
}

TEST_CASE("find_roots recovers prescribed roots") {
    testing::Rng rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t degree = 1 + rng() % 9;
        std::vector<ComplexDouble> roots;
        for (std::size_t k = 0; k < degree; ++k) {
            roots.emplace_back(testing::uniform(rng, -2.0, 2.0), testing::uniform(rng, -2.0, 2.0));
        }
        // coefficients of prod (z - r_k), leading first
        std::vector<ComplexDouble> c = {1.0};
        for (const auto& r : roots) {
            c.push_back(0.0);
            for (std::size_t k = c.size() - 1; k > 0; --k) c[k] -= r * c[k - 1];
        }
        const auto found = find_roots(c);
        CHECK(testing::multiset_distance(roots, found.roots) < 1e-7);
    }
}

TEST_CASE("classify_roots examples") {
    const auto circle = classify_roots({{0.0, 1.0}, {0.0, -1.0}});
    CHECK(circle.on_circle.size() == 2);
    CHECK(circle.symmetric_pairs.empty());
    CHECK(circle.unpaired.empty());

    const double s5 = std::sqrt(5.0);
    const auto pair = classify_roots({(3.0 + s5) / 2.0, (3.0 - s5) / 2.0});
    CHECK(pair.on_circle.empty());
    CHECK(pair.symmetric_pairs.size() == 1);

    const auto loose = classify_roots({2.0, 3.0});
    CHECK(loose.unpaired.size() == 2);
    CHECK(loose.symmetric_pairs.empty());
}

TEST_CASE("classify_roots partitions every index exactly once") {
    testing::Rng rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<ComplexDouble> roots;
        const int circle = static_cast<int>(rng() % 4);
        const int pairs = static_cast<int>(rng() % 3);
        for (int k = 0; k < circle; ++k) roots.push_back(std::polar(1.0, testing::uniform(rng, 0.0, 6.0)));
        for (int k = 0; k < pairs; ++k) {
            const auto z = std::polar(testing::uniform(rng, 1.2, 3.0), testing::uniform(rng, 0.0, 6.0));
            roots.push_back(z);
            roots.push_back(1.0 / std::conj(z));
        }
        std::shuffle(roots.begin(), roots.end(), rng);
        const auto cls = classify_roots(roots);
        CHECK(cls.on_circle.size() == static_cast<std::size_t>(circle));
        CHECK(cls.symmetric_pairs.size() == static_cast<std::size_t>(pairs));
        CHECK(cls.unpaired.empty());
        std::vector<int> seen(roots.size(), 0);
        for (auto i : cls.on_circle) ++seen[i];
        for (auto [a, b] : cls.symmetric_pairs) {
            ++seen[a];
            ++seen[b];
        }
        for (int s : seen) CHECK(s == 1);
    }
}
