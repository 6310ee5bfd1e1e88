#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "psl/algebraic.hpp"
#include "psl/errors.hpp"
#include "tests/test_util.hpp"

using namespace psl;
using namespace psl::testutil;

TEST_CASE("construction and validation") {
    AlgebraicNumber three_halves = rat(3, 2);
    CHECK(three_halves.minpoly() == IntPoly({-3, 2}));
    CHECK(*three_halves.rational_value() == Rational(3, 2));
    CHECK(three_halves.is_real());

    // a box-backed number: phi from minpoly + wide box
    ComplexBox wide(RatInterval(Rational(1), Rational(2)),
                    RatInterval(Rational(0), Rational(0)));
    AlgebraicNumber p = AlgebraicNumber::from_minpoly_box(golden_poly(), wide);
    CHECK(alg_equals(p, phi()));

    // a box covering both roots is rejected
    ComplexBox both(RatInterval(Rational(-10), Rational(10)),
                    RatInterval(Rational(-10), Rational(10)));
    CHECK_THROWS_AS(AlgebraicNumber::from_minpoly_box(golden_poly(), both), InvalidInput);
    // reducible polynomial is rejected
    CHECK_THROWS_AS(AlgebraicNumber::from_minpoly_box(IntPoly({-1, 0, 0, 0, 1}), wide),
                    InvalidInput);
}

TEST_CASE("arithmetic catalog") {
    CHECK(alg_equals(alg_mul(sqrt2(), sqrt2()), rat(2)));
    CHECK(alg_equals(alg_add(phi(), psi_conj()), rat(1)));

    AlgebraicNumber sqrt3 = AlgebraicNumber::root_of(IntPoly({-3, 0, 1}), 1);
    AlgebraicNumber s = alg_add(sqrt2(), sqrt3);
    CHECK(s.minpoly() == IntPoly({1, 0, -10, 0, 1}));
    auto enc = enclosure(s, 96);
    CHECK(std::abs(enc.re().midpoint().to_double() - 3.146264369941973) < 1e-12);

    CHECK(alg_equals(alg_sub(alg_add(phi(), sqrt2()), sqrt2()), phi()));
    CHECK(alg_equals(alg_div(alg_mul(phi(), sqrt2()), sqrt2()), phi()));
    CHECK_THROWS_AS(alg_div(phi(), rat(0)), DivisionByZero);
}

TEST_CASE("powers") {
    AlgebraicNumber p2 = alg_pow(phi(), 2);
    CHECK(p2.minpoly() == IntPoly({1, -3, 1}));
    CHECK(alg_equals(p2, alg_add(phi(), rat(1))));  // phi^2 = phi + 1
    CHECK(alg_equals(alg_pow(phi(), 0), rat(1)));
    CHECK(alg_equals(alg_pow(rat(3, 2), 4), rat(81, 16)));
    CHECK(alg_equals(alg_pow(sqrt2(), 2), rat(2)));
}

TEST_CASE("equality") {
    // same root through different boxes
    auto conj = conjugates_of(phi());
    CHECK(alg_equals(conj[1], phi()));
    CHECK_FALSE(alg_equals(phi(), psi_conj()));
    CHECK(alg_equals(alg_mul(sqrt2(), sqrt2()), rat(2)));
}

TEST_CASE("conjugates") {
    auto c = conjugates_of(sqrt2());
    REQUIRE(c.size() == 2);
    CHECK(alg_equals(c[0], minus_sqrt2()));
    CHECK(alg_equals(c[1], sqrt2()));

    auto r = conjugates_of(rat(3, 2));
    REQUIRE(r.size() == 1);
    CHECK(alg_equals(r[0], rat(3, 2)));

    auto pl = conjugates_of(plastic());
    REQUIRE(pl.size() == 3);
    bool contains_self = false;
    for (const auto& x : pl) contains_self = contains_self || alg_equals(x, plastic());
    CHECK(contains_self);
}

TEST_CASE("complex conjugation") {
    CHECK(alg_equals(complex_conjugate_of(phi()), phi()));
    AlgebraicNumber i = imag_unit();
    AlgebraicNumber mi = complex_conjugate_of(i);
    CHECK_FALSE(alg_equals(i, mi));
    CHECK(alg_equals(alg_mul(i, mi), rat(1)));  // i * (-i) = 1
    auto pl = conjugates_of(plastic());
    CHECK(alg_equals(complex_conjugate_of(pl[1]), pl[0]));
}

TEST_CASE("integrality, rational values, units") {
    CHECK(is_algebraic_integer(phi()));
    CHECK(is_algebraic_integer(sqrt2()));
    CHECK_FALSE(is_algebraic_integer(rat(3, 2)));
    CHECK(*rational_value(rat(2)) == Rational(2));
    CHECK_FALSE(rational_value(phi()).has_value());
    CHECK(*rational_value(alg_add(phi(), psi_conj())) == Rational(1));

    CHECK(*root_of_unity_order(rat(1)) == 1);
    CHECK(*root_of_unity_order(rat(-1)) == 2);
    CHECK(*root_of_unity_order(zeta6()) == 6);
    CHECK(alg_equals(alg_pow(zeta6(), 6), rat(1)));
    CHECK_FALSE(root_of_unity_order(phi()).has_value());
    CHECK(*root_of_unity_order(imag_unit()) == 4);
    CHECK_THROWS_AS(root_of_unity_order(rat(0)), InvalidInput);
}

TEST_CASE("modulus against one") {
    CHECK(compare_modulus_to_one(psi_conj()) == ModulusCompare::less);
    CHECK(compare_modulus_to_one(zeta6()) == ModulusCompare::equal);
    CHECK(compare_modulus_to_one(phi()) == ModulusCompare::greater);
    CHECK(compare_modulus_to_one(rat(-1)) == ModulusCompare::equal);
    CHECK(compare_modulus_to_one(rat(3, 2)) == ModulusCompare::greater);
    CHECK_THROWS_AS(compare_modulus_to_one(rat(0)), InvalidInput);
    // equal <=> a * conj(a) = 1
    for (const auto& a : {zeta6(), imag_unit(), phi(), rat(5, 7)}) {
        bool eq = compare_modulus_to_one(a) == ModulusCompare::equal;
        CHECK(eq == alg_equals(alg_mul(a, complex_conjugate_of(a)), rat(1)));
    }
}

TEST_CASE("real comparison, sign, abs, sqrt") {
    CHECK(compare_real(psi_conj(), phi()) < 0);
    CHECK(compare_real(phi(), rat(1)) > 0);
    CHECK(compare_real(phi(), phi()) == 0);
    CHECK(sign_of(psi_conj()) < 0);
    CHECK(sign_of(rat(0)) == 0);
    CHECK(alg_equals(alg_abs(psi_conj()), alg_neg(psi_conj())));
    CHECK(alg_equals(alg_sqrt_nonneg(rat(9, 4)), rat(3, 2)));
    AlgebraicNumber s = alg_sqrt_nonneg(rat(2));
    CHECK(alg_equals(s, sqrt2()));
    // |psi| is the positive root of x^2 + x - 1
    AlgebraicNumber a = alg_abs(psi_conj());
    CHECK(a.minpoly() == IntPoly({-1, 1, 1}));
}

TEST_CASE("field laws on fuzzed small numbers") {
    Rng rng(424242);
    for (int round = 0; round < 12; ++round) {
        AlgebraicNumber a = random_algebraic(rng, 3, 6);
        AlgebraicNumber b = random_algebraic(rng, 2, 6);
        CHECK(alg_equals(alg_add(a, b), alg_add(b, a)));
        CHECK(alg_equals(alg_mul(a, b), alg_mul(b, a)));
        CHECK(alg_equals(alg_sub(alg_add(a, b), b), a));
        if (!a.is_zero()) CHECK(alg_equals(alg_mul(a, alg_reciprocal(a)), rat(1)));
        CHECK(static_cast<size_t>(a.degree()) == conjugates_of(a).size());
    }
}
