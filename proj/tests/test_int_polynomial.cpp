#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psl/int_polynomial.hpp"
#include "psl/errors.hpp"
#include "tests/test_util.hpp"

using namespace psl;

TEST_CASE("arithmetic and normal forms") {
    IntPoly a({1, 2, 3});
    IntPoly b({-1, 1});
    CHECK((a * b) == IntPoly({-1, -1, -1, 3}));
    CHECK((a + b) == IntPoly({0, 3, 3}));
    CHECK((a - a).is_zero());
    CHECK(IntPoly({2, 4, 6}).primitive_part() == IntPoly({1, 2, 3}));
    CHECK(IntPoly({0, 0, -2, -4}).primitive_part() == IntPoly({0, 0, 1, 2}));
    CHECK(IntPoly({-1, -1, 1}).is_primitive());
    CHECK(IntPoly({1, 2, 3}).derivative() == IntPoly({2, 6}));
    CHECK(IntPoly({1, 2, 3}).reversed() == IntPoly({3, 2, 1}));
    CHECK(IntPoly({1, 2, 3}).negated_argument() == IntPoly({1, -2, 3}));
    CHECK(IntPoly({1, 2}).squared_argument() == IntPoly({1, 0, 2}));
}

TEST_CASE("evaluation and exact division") {
    IntPoly p({-2, 0, 1});  // x^2 - 2
    CHECK(p.eval(Int(3)) == 7);
    CHECK(p.eval(Rational(3, 2)) == Rational(1, 4));
    CHECK(p.sign_at(Rational(3, 2)) == 1);
    CHECK(p.sign_at(Rational(7, 5)) == -1);
    IntPoly prod = IntPoly({-1, 1}) * IntPoly({2, 3});
    CHECK(prod.divide_exact(IntPoly({-1, 1})) == IntPoly({2, 3}));
    IntPoly q;
    CHECK(prod.try_divide(IntPoly({2, 3}), &q));
    CHECK(q == IntPoly({-1, 1}));
    CHECK_FALSE(prod.try_divide(IntPoly({1, 1}), &q));
}

TEST_CASE("gcd and squarefree decomposition") {
    IntPoly a = IntPoly({-1, 1}) * IntPoly({1, 1}) * IntPoly({1, 1});
    IntPoly b = IntPoly({1, 1}) * IntPoly({2, 1});
    CHECK(gcd(a, b) == IntPoly({1, 1}));

    // (x-1)^2 (x^2+1)^3 (x+2)
    IntPoly f = IntPoly({2, 1});
    IntPoly sq = IntPoly({-1, 1});
    IntPoly cb = IntPoly({1, 0, 1});
    f = f * sq * sq * cb * cb * cb;
    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 3);
    IntPoly recon = IntPoly::constant(1);
    for (const auto& [g, m] : dec)
        for (int i = 0; i < m; ++i) recon = recon * g;
    CHECK(recon == f.primitive_part());
    CHECK(is_squarefree(IntPoly({-2, 0, 1})));
    CHECK_FALSE(is_squarefree(sq * sq));
}

TEST_CASE("cyclotomic polynomials and euler phi") {
    CHECK(cyclotomic(1) == IntPoly({-1, 1}));
    CHECK(cyclotomic(2) == IntPoly({1, 1}));
    CHECK(cyclotomic(4) == IntPoly({1, 0, 1}));
    CHECK(cyclotomic(6) == IntPoly({1, -1, 1}));
    CHECK(cyclotomic(12) == IntPoly({1, 0, -1, 0, 1}));
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(30) == 8);
}

TEST_CASE("linear substitutions") {
    IntPoly p({-2, 0, 1});  // roots +-sqrt(2)
    // roots + 1/2: q(x) = p(x - 1/2) cleared -> 4x^2 - 4x - 7
    CHECK(minpoly_shift(p, Rational(1, 2)) == IntPoly({-7, -4, 4}));
    // roots * 3: x^2 - 18
    CHECK(minpoly_scale(p, Rational(3)) == IntPoly({-18, 0, 1}));
    // roots * 1/2: 2x^2 - 1
    CHECK(minpoly_scale(p, Rational(1, 2)) == IntPoly({-1, 0, 2}));
}

TEST_CASE("Sturm chains count real roots") {
    SturmChain chain(IntPoly({-2, 0, 1}));
    CHECK(chain.count_roots(Rational(-10), Rational(10)) == 2);
    CHECK(chain.count_roots(Rational(0), Rational(10)) == 1);
    CHECK(chain.count_roots(Rational(2), Rational(10)) == 0);

    SturmChain cubic(IntPoly({-1, -1, 0, 1}));  // one real root
    CHECK(cubic.count_roots(Rational(-10), Rational(10)) == 1);
    CHECK(cubic.count_roots(Rational(1), Rational(2)) == 1);

    SturmChain quartic(IntPoly({1, 0, 1}));  // no real roots
    CHECK(quartic.count_roots(Rational(-10), Rational(10)) == 0);
}

TEST_CASE("resultants through the Sylvester determinant") {
    // Res_y(y^2 - 2, (x - y)^2 - 3) vanishes exactly at x = +-sqrt(2)+-sqrt(3):
    // x^4 - 10 x^2 + 1 up to a constant.
    IntPoly a({-2, 0, 1});
    std::vector<IntPoly> c = {
        IntPoly({-3, 0, 1}),        // x^2 - 3
        IntPoly({0, -2}),           // -2x
        IntPoly::constant(Int(1)),  // 1
    };
    IntPoly res = resultant_y(a, c).primitive_part();
    CHECK(res == IntPoly({1, 0, -10, 0, 1}));
}

TEST_CASE("zero polynomial is rejected") {
    CHECK_THROWS_AS(squarefree_decomposition(IntPoly()), InvalidInput);
    CHECK_THROWS_AS(SturmChain(IntPoly()), InvalidInput);
}
