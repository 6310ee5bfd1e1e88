#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "psl/pisot.hpp"
#include "psl/errors.hpp"
#include "tests/test_util.hpp"

using namespace psl;
using namespace psl::testutil;

TEST_CASE("pisot numbers") {
    CHECK(is_pisot_number(phi()));
    CHECK(is_pisot_number(plastic()));
    CHECK(is_pisot_number(rat(2)));
    CHECK_FALSE(is_pisot_number(sqrt2()));       // conjugate -sqrt2 too large
    CHECK_FALSE(is_pisot_number(rat(3, 2)));     // not an algebraic integer
    CHECK_FALSE(is_pisot_number(rat(1)));        // not > 1
    CHECK_FALSE(is_pisot_number(psi_conj()));    // negative
    CHECK_FALSE(is_pisot_number(imag_unit()));   // not real
}

TEST_CASE("classification catalog") {
    auto c1 = classify_tuple({phi(), psi_conj()});
    CHECK(c1.verdict == TupleVerdict::pisot);
    CHECK(c1.extra_conjugates.empty());
    CHECK(c1.completed_sum == Rational(1));

    auto c2 = classify_tuple({rat(3, 2)});
    CHECK(c2.verdict == TupleVerdict::neither);
    CHECK(c2.failure == TupleClassification::Failure::sum_not_integer);
    CHECK(c2.completed_sum == Rational(3, 2));

    auto c3 = classify_tuple({sqrt2()});
    CHECK(c3.verdict == TupleVerdict::neither);
    CHECK(c3.failure == TupleClassification::Failure::large_extra_conjugate);
    REQUIRE(c3.failing_conjugate.has_value());
    CHECK(alg_equals(*c3.failing_conjugate, minus_sqrt2()));
    CHECK(c3.completed_sum == Rational(0));  // the sum itself was fine

    auto c4 = classify_tuple({phi()});
    CHECK(c4.verdict == TupleVerdict::pisot);
    REQUIRE(c4.extra_conjugates.size() == 1);
    CHECK(alg_equals(c4.extra_conjugates[0], psi_conj()));

    CHECK_THROWS_AS(classify_tuple({phi(), phi()}), InvalidInput);
    CHECK_THROWS_AS(classify_tuple({rat(0)}), InvalidInput);
    CHECK_THROWS_AS(classify_tuple({}), InvalidInput);
}

TEST_CASE("permutation invariance") {
    auto a = classify_tuple({phi(), rat(2)});
    auto b = classify_tuple({rat(2), phi()});
    CHECK(a.verdict == b.verdict);
    CHECK(a.completed_sum == b.completed_sum);
    CHECK(a.extra_conjugates.size() == b.extra_conjugates.size());
}

TEST_CASE("completed traces") {
    CHECK(alg_equals(completed_trace({phi()}), rat(1)));
    CHECK(alg_equals(completed_trace({sqrt2()}), rat(0)));
    CHECK(alg_equals(completed_trace({rat(2)}), rat(2)));
    // the trace of any single root equals -(second coefficient)/(leading)
    for (const IntPoly& p : {IntPoly({-1, -1, 1}), IntPoly({-1, -1, 0, 1}),
                             IntPoly({3, -2, 0, 0, 1}), IntPoly({1, -1, 1})}) {
        if (!is_irreducible(p)) continue;
        AlgebraicNumber root = AlgebraicNumber::root_of(p, 0);
        Rational expect(-p[p.degree() - 1], p.leading());
        CHECK(*completed_trace({root}).rational_value() == expect);
    }
}

TEST_CASE("roots of unity classify consistently") {
    // zeta6: the other primitive 6th root sits on the unit circle, so the
    // modulus condition fails.
    auto c = classify_tuple({zeta6()});
    CHECK(c.verdict == TupleVerdict::neither);
    CHECK(c.failure == TupleClassification::Failure::large_extra_conjugate);
    // 1 and -1 have no extra conjugates and integer sums
    CHECK(classify_tuple({rat(1)}).verdict == TupleVerdict::pisot);
    CHECK(classify_tuple({rat(-1)}).verdict == TupleVerdict::pisot);
    // a pisot number alone is always a pisot tuple
    CHECK(classify_tuple({plastic()}).verdict == TupleVerdict::pisot);
}
