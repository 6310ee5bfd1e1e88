#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psl/poly_factor.hpp"
#include "psl/errors.hpp"
#include "tests/test_util.hpp"

using namespace psl;
using psl::testutil::Rng;

namespace {

// Independent irreducibility check for degree <= 3: rational root test plus
// quadratic discriminant.
bool irreducible_low_degree(const IntPoly& p) {
    const int d = p.degree();
    REQUIRE(d <= 3);
    if (d == 1) return true;
    // search rational roots num/den with num | p0, den | lead
    Int p0 = abs(p[0]);
    Int lead = abs(p.leading());
    if (p0 == 0) return false;
    for (Int num(1); num <= p0; ++num) {
        if (p0 % num != 0) continue;
        for (Int den(1); den <= lead; ++den) {
            if (lead % den != 0) continue;
            Rational r = make_rational(num, den);
            if (p.sign_at(r) == 0 || p.sign_at(-r) == 0) return false;
        }
    }
    if (d == 3) return true;  // cubic without rational roots is irreducible
    Int disc = p[1] * p[1] - 4 * p[2] * p[0];
    if (disc < 0) return true;
    Int s = sqrt(disc);
    return s * s != disc;  // reducible iff the discriminant is a perfect square
}

}  // namespace

TEST_CASE("catalog examples") {
    auto f1 = factor_over_rationals(IntPoly({-1, 0, 0, 0, 1}));  // x^4 - 1
    REQUIRE(f1.size() == 3);
    CHECK(f1[0].first == IntPoly({-1, 1}));
    CHECK(f1[1].first == IntPoly({1, 1}));
    CHECK(f1[2].first == IntPoly({1, 0, 1}));
    for (const auto& [g, m] : f1) CHECK(m == 1);

    auto f2 = factor_over_rationals(IntPoly({-1, -1, 1}));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].first == IntPoly({-1, -1, 1}));
    CHECK(irreducible_low_degree(f2[0].first));

    CHECK(factor_over_rationals(IntPoly::constant(Int(7))).empty());
    CHECK_THROWS_AS(factor_over_rationals(IntPoly()), InvalidInput);
}

TEST_CASE("multiplicities survive factoring") {
    IntPoly f = IntPoly({-1, 1}) * IntPoly({-1, 1}) * IntPoly({1, 0, 1}) *
                IntPoly({1, 0, 1}) * IntPoly({1, 0, 1});
    auto fac = factor_over_rationals(f);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == IntPoly({-1, 1}));
    CHECK(fac[0].second == 2);
    CHECK(fac[1].first == IntPoly({1, 0, 1}));
    CHECK(fac[1].second == 3);
}

TEST_CASE("hard splits") {
    // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2): no rational roots, splits only
    // through recombination.
    auto fac = factor_over_rationals(IntPoly({4, 0, 0, 0, 1}));
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == IntPoly({2, -2, 1}));
    CHECK(fac[1].first == IntPoly({2, 2, 1}));

    // Swinnerton-Dyer style: minimal polynomial of sqrt2 + sqrt3 is
    // irreducible of degree 4.
    auto sd = factor_over_rationals(IntPoly({1, 0, -10, 0, 1}));
    REQUIRE(sd.size() == 1);

    // non-monic: 6x^2 + x - 2 = (2x - 1)(3x + 2)
    auto nm = factor_over_rationals(IntPoly({-2, 1, 6}));
    REQUIRE(nm.size() == 2);
    CHECK(nm[0].first == IntPoly({-1, 2}));
    CHECK(nm[1].first == IntPoly({2, 3}));
}

TEST_CASE("fuzz: factors re-expand to the input") {
    Rng rng(20240817);
    int rounds = 0;
    while (rounds < 40) {
        // build a product of 2-3 random primitive polynomials
        IntPoly f = IntPoly::constant(1);
        int parts = static_cast<int>(rng.range(2, 3));
        for (int i = 0; i < parts; ++i) {
            int deg = static_cast<int>(rng.range(1, 3));
            std::vector<Int> c(static_cast<size_t>(deg) + 1);
            for (auto& v : c) v = rng.range(-6, 6);
            if (c.back() == 0) c.back() = 1;
            IntPoly g(std::move(c));
            if (g.degree() < 1) continue;
            f = f * g;
        }
        if (f.degree() < 2) continue;
        ++rounds;
        auto fac = factor_over_rationals(f);
        IntPoly recon = IntPoly::constant(1);
        for (const auto& [g, m] : fac) {
            CHECK(g.is_primitive());
            if (g.degree() <= 3) CHECK(irreducible_low_degree(g));
            for (int i = 0; i < m; ++i) recon = recon * g;
        }
        CHECK(recon == f.primitive_part());
    }
}

TEST_CASE("is_irreducible") {
    CHECK(is_irreducible(IntPoly({-1, -1, 1})));
    CHECK(is_irreducible(IntPoly({-1, -1, 0, 1})));
    CHECK_FALSE(is_irreducible(IntPoly({-1, 0, 0, 0, 1})));
    CHECK_FALSE(is_irreducible(IntPoly::constant(Int(3))));
}
