#include <doctest.h>

#include <cmath>
#include <numbers>

#include "selfinv/transform.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace selfinv;

namespace {
const GaussianRational kI = GaussianRational::i();

SelfInversiveForm a_form(std::vector<GaussianRational> zeta) {
    const int n = static_cast<int>(zeta.size()) - 2;
    return {n, SpaceTag::A, std::move(zeta)};
}
SelfInversiveForm b_form(std::vector<GaussianRational> zeta) {
    const int n = static_cast<int>(zeta.size()) - 2;
    return {n, SpaceTag::B, std::move(zeta)};
}
RealBinaryForm real(std::vector<Rational> coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 2;
    return {n, std::move(coeffs)};
}
RealBinaryForm add(const RealBinaryForm& a, const RealBinaryForm& b) {
    RealBinaryForm out = a;
    for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] += b.coeffs[k];
    return out;
}
SelfInversiveForm add(const SelfInversiveForm& a, const SelfInversiveForm& b) {
    SelfInversiveForm out = a;
    for (std::size_t k = 0; k < out.zeta.size(); ++k) out.zeta[k] += b.zeta[k];
    return out;
}
}  // namespace

TEST_CASE("phi examples") {
    CHECK(phi(a_form({1, 0, 1})) == real({-2, 0, 2}));
    CHECK(phi(a_form({1, 1})) == real({0, -2}));
    CHECK(phi(a_form({1, 2, 1})) == real({0, 0, 4}));
    // general n = 0: zeta_0 = a + bi gives -2b X - 2a Y
    CHECK(phi(a_form({GaussianRational(3, 5), GaussianRational(3, -5)})) == real({-10, -6}));
}

TEST_CASE("phi rejects asymmetric input and forms from B") {
    CHECK_THROWS_AS(phi(a_form({1, kI, 1})), ValidationError);
    CHECK_THROWS_AS(phi(b_form({1, 0, 1})), ValidationError);
}

TEST_CASE("phi_inverse examples") {
    CHECK(phi_inverse(real({-2, 0, 2})) == a_form({1, 0, 1}));
    CHECK(phi_inverse(real({0, -2})) == a_form({1, 1}));
    CHECK(phi_inverse(real({0, 0, 0, 0})) == a_form({0, 0, 0, 0}));
}

TEST_CASE("psi examples") {
    CHECK(psi(b_form({1, 1})) == real({2, 0}));
    CHECK(psi(b_form({1, 0, 0, 1})) == real({2, 0, -6, 0}));
    CHECK(psi(b_form({0, 0, 0, 0, 0})) == real({0, 0, 0, 0, 0}));
    // odd n: p = iT^2 + iU^2 -> i * i * (2X^2 - 2Y^2)
    CHECK(psi(b_form({kI, 0, kI})) == real({-2, 0, 2}));
}

TEST_CASE("psi_inverse examples") {
    CHECK(psi_inverse(real({2, 0}), Parity::even) == b_form({1, 1}));
    CHECK(psi_inverse(real({2, 0, -6, 0}), Parity::even) == b_form({1, 0, 0, 1}));
    CHECK(psi_inverse(real({0, 0, 0}), Parity::odd) == b_form({0, 0, 0}));
    CHECK_THROWS_AS(psi_inverse(real({2, 0}), Parity::odd), std::invalid_argument);
}

TEST_CASE("phi agrees with interpolation of point evaluations") {
    testing::Rng rng(17);
    for (int n = 0; n <= 7; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto f = testing::random_form(rng, n, SpaceTag::A, false);
            const auto expected = testing::phi_by_interpolation(f);
            const auto g = phi(f);
            for (int j = 0; j < n + 2; ++j) CHECK(GaussianRational(g.coeffs[j]) == expected[j]);
        }
    }
}

TEST_CASE("round trips and linearity") {
    testing::Rng rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(rng() % 11);
        const auto f = testing::random_form(rng, n, SpaceTag::A, false);
        const auto f2 = testing::random_form(rng, n, SpaceTag::A, false);
        CHECK(phi_inverse(phi(f)) == f);
        CHECK(phi(add(f, f2)) == add(phi(f), phi(f2)));
        const auto g = testing::random_real(rng, n);
        CHECK(phi(phi_inverse(g)) == g);
        const auto p = testing::random_form(rng, n, SpaceTag::B, false);
        CHECK(psi_inverse(psi(p), parity_of(n)) == p);
        CHECK(psi(psi_inverse(g, parity_of(n))) == g);
    }
}

TEST_CASE("phi_closed_form examples and agreement with phi") {
    CHECK(phi_closed_form(a_form({1, 0, 1})) == real({-2, 0, 2}));
    CHECK(phi_closed_form(a_form({1, 1})) == real({0, -2}));
    // real zeta with odd n: odd-index coefficients vanish
    const auto odd = phi_closed_form(a_form({2, 5, -3, 5, 2}));
    CHECK(odd.coeffs[1].is_zero());
    CHECK(odd.coeffs[3].is_zero());

    testing::Rng rng(29);
    for (int n = 0; n <= 10; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto f = testing::random_form(rng, n, SpaceTag::A, false);
            CHECK(phi_closed_form(f) == phi(f));
        }
    }
}

TEST_CASE("f(1,1) = c_0 (-i)^{n+1} for monic A-forms") {
    testing::Rng rng(31);
    const GaussianRational one(1);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto f = testing::random_monic_a(rng, n);
        const auto c0 = phi(f).coeffs[0];
        CHECK(evaluate(f, one, one) == GaussianRational(c0) * pow(-kI, static_cast<unsigned>(n + 1)));
    }
}

TEST_CASE("normalize_monic") {
    SUBCASE("already monic") {
        const FloatForm f(1, SpaceTag::A, {1.0, 0.5, 1.0});
        const auto out = normalize_monic(f);
        CHECK(out.rotation == ComplexDouble(1.0));
        CHECK(out.scale == doctest::Approx(1.0));
        CHECK(std::abs(out.form.zeta[1] - 0.5) < 1e-15);
    }
    SUBCASE("real positive leading coefficient") {
        const FloatForm f(1, SpaceTag::A, {4.0, 3.0, 4.0});
        const auto out = normalize_monic(f);
        CHECK(out.scale == doctest::Approx(2.0));
        CHECK(out.angle == doctest::Approx(0.0));
        CHECK(std::abs(out.form.zeta[0] - 1.0) < 1e-15);
        CHECK(std::abs(out.form.zeta[2] - 1.0) < 1e-15);
    }
    SUBCASE("negative leading coefficient") {
        const FloatForm f(1, SpaceTag::A, {-1.0, 0.0, -1.0});
        const auto out = normalize_monic(f);
        CHECK(out.angle == doctest::Approx(std::numbers::pi / 2));
        CHECK(std::abs(out.rotation - ComplexDouble(0.0, 1.0)) < 1e-15);
        CHECK(std::abs(out.form.zeta[0] - 1.0) < 1e-14);
    }
    SUBCASE("symmetry is preserved") {
        testing::Rng rng(37);
        for (int trial = 0; trial < 30; ++trial) {
            const int n = static_cast<int>(rng() % 6);
            auto f = to_float(testing::random_form(rng, n, SpaceTag::A, false));
            if (f.zeta[0] == ComplexDouble(0.0)) continue;
            for (int branch = 0; branch <= n; ++branch) {
                const auto out = normalize_monic(f, branch).form;
                CHECK(std::abs(out.zeta.front() - 1.0) < 1e-12);
                CHECK(std::abs(out.zeta.back() - 1.0) < 1e-12);
                for (std::size_t k = 0; k < out.zeta.size(); ++k) {
                    CHECK(std::abs(out.zeta[k] - std::conj(out.zeta[out.zeta.size() - 1 - k])) <
                          1e-9 * (1.0 + std::abs(out.zeta[k])));
                }
            }
        }
    }
    CHECK_THROWS_AS(normalize_monic(FloatForm(1, SpaceTag::A, {0.0, 1.0, 0.0})), PreconditionError);
}

TEST_CASE("deflate examples") {
    CHECK(deflate(a_form({1, 2, 1})) == a_form({1, 1}));
    CHECK(deflate(a_form({1, 0, 0, 1})) == a_form({1, -1, 1}));
    CHECK_THROWS_AS(deflate(a_form({1, 0, 1})), PreconditionError);
    CHECK_THROWS_AS(deflate(a_form({1, 1})), PreconditionError);
    CHECK_THROWS_AS(deflate(a_form({2, 0, 2})), PreconditionError);
}

TEST_CASE("deflate inverts multiplication by (T-U)") {
    testing::Rng rng(41);
    const auto linear = a_form({1, 1});
    for (int trial = 0; trial < 40; ++trial) {
        const auto cofactor = testing::random_monic_a(rng, static_cast<int>(rng() % 7));
        const auto f = multiply(linear, cofactor);
        const auto q = deflate(f);
        CHECK(q == cofactor);
        CHECK(multiply(linear, q) == f);
    }
}

TEST_CASE("deflate_all counts repeated factors") {
    const auto d = deflate_all(a_form({1, 2, 1}));
    CHECK(d.count == 2);
    CHECK_FALSE(d.remainder.has_value());
    const auto none = deflate_all(a_form({1, 0, 1}));
    CHECK(none.count == 0);
    REQUIRE(none.remainder.has_value());
    CHECK(*none.remainder == a_form({1, 0, 1}));
}

TEST_CASE("map_roots examples") {
    const auto out = map_roots({ComplexDouble(-1.0), ComplexDouble(0.0, 1.0), ComplexDouble(2.0),
                                ComplexDouble(0.5), ComplexDouble(1.0)});
    CHECK(std::abs(out[0].x) < 1e-15);
    CHECK(std::abs(out[1].x - 1.0) < 1e-15);
    CHECK(std::abs(out[2].x - ComplexDouble(0.0, 3.0)) < 1e-15);
    CHECK(std::abs(out[3].x - ComplexDouble(0.0, -3.0)) < 1e-15);
    CHECK(out[4].at_infinity);
    CHECK(out[1].real);
    CHECK_FALSE(out[2].real);
}

TEST_CASE("unit-circle points map to the real line") {
    testing::Rng rng(43);
    for (int trial = 0; trial < 1000; ++trial) {
        const double theta = testing::uniform(rng, 1e-3, 2 * std::numbers::pi - 1e-3);
        const auto p = map_roots({std::polar(1.0, theta)})[0];
        CHECK(std::abs(p.x.imag()) <= 1e-9);
    }
}
